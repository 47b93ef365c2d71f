#pragma once

#include "hdual/rep.hpp"

#include <string>
#include <vector>

namespace hdual {

struct DualResult {
    std::vector<ClassicalRep> candidates;
    bool resolved = false;
    std::vector<std::string> warnings;
};

/// Langlands data of the Aubert dual, as the list of representations that the
/// rho-data cannot tell apart. Throws ReconstructionFailed when nothing survives.
DualResult aubert_dual(const ClassicalRep& rep);

/// Candidates before disambiguation.
std::vector<ClassicalRep> dual_candidates(const ClassicalRep& rep);

/// Drops candidates whose derivative chains contradict those of original.
DualResult disambiguate(const std::vector<ClassicalRep>& candidates, const ClassicalRep& original);

}  // namespace hdual
