#pragma once

#include "hdual/rep.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hdual {

/// M^epsilon_rho(pi) = [(x_1,k_1), ..., (x_t,k_t); pi_0].
struct RhoData {
    Sign epsilon = Sign::plus;
    CuspLabel rho;
    std::vector<RhoEntry> entries;
    ClassicalRep terminal;
};

/// Iteration cap: HDUAL_MAX_SUPPORT when set, otherwise fallback.
std::size_t iteration_limit(std::size_t fallback);

/// Iterated extremal highest derivatives at rho; multiplicities at x = 0 are dropped.
RhoData rho_data(const ClassicalRep& rep, Sign epsilon, const CuspLabel& rho);

std::vector<RhoEntry> negate(const std::vector<RhoEntry>& entries);

struct Block {
    std::vector<RhoEntry> entries;  // x decreasing by one, k non-increasing
    HalfInt start() const { return entries.front().x; }
    HalfInt end() const { return entries.back().x; }
};

struct NormalForm {
    std::vector<Block> blocks;  // starts strictly increasing
    std::vector<RhoEntry> flatten() const;
};

/// Regroups minus-data into blocks; throws NotNormalizable when that fails.
NormalForm normal_form(const std::vector<RhoEntry>& entries);
NormalForm normal_form(const RhoData& data);

/// Every block of every minus-data has start + end >= 0.
bool is_tempered_by_data(const ClassicalRep& rep);

struct StripResult {
    Segment segment;
    NormalForm data;
};

/// Removes Delta_rho[start, end] of block i, lowering all its orders by one.
StripResult strip_segment(const NormalForm& data, const CuspLabel& rho, std::size_t block_index);

/// The rho-part of the GL Langlands data: blocks with x_1 + x_j < 0 give [x_1, x_j]^(k_j - k_{j+1}).
GLData gl_part_from_data(const NormalForm& data, const CuspLabel& rho);

struct LanglandsFromData {
    GLData gl;
    std::map<std::string, NormalForm> residual;  // minus-data of the tempered part, by label name
};

/// Strips segments until all blocks are tempered, checking against gl_part_from_data.
LanglandsFromData langlands_from_data(const std::map<std::string, std::pair<CuspLabel, NormalForm>>& all);

std::string format_entries(const std::vector<RhoEntry>& entries);

}  // namespace hdual
