#include "hdual/rhodata.hpp"

#include "hdual/jantzen.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace hdual {

std::size_t iteration_limit(std::size_t fallback) {
    if (const char* env = std::getenv("HDUAL_MAX_SUPPORT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return fallback;
}

RhoData rho_data(const ClassicalRep& rep, Sign epsilon, const CuspLabel& rho) {
    RhoData out;
    out.epsilon = epsilon;
    out.rho = rho;
    ClassicalRep cur = rep;
    const std::size_t limit = iteration_limit(cuspidal_support(rep).size() + 1);
    while (true) {
        std::set<HalfInt> xs;
        for (const auto& p : cuspidal_support(cur))
            if (p.rho == rho) xs.insert(p.z);
        std::vector<HalfInt> order(xs.begin(), xs.end());
        if (epsilon == Sign::plus) std::reverse(order.begin(), order.end());
        bool moved = false;
        for (HalfInt x : order) {
            DerivativeResult d = highest_derivative(cur, rho, x);
            if (d.order == 0) continue;
            out.entries.push_back({x, d.order});
            cur = std::move(d.rep);
            moved = true;
            break;
        }
        if (!moved) break;
        if (out.entries.size() > limit)
            throw Error(ErrorKind::non_termination, "rho_data: more than " + std::to_string(limit) + " steps");
    }
    out.terminal = std::move(cur);
    return out;
}

std::vector<RhoEntry> negate(const std::vector<RhoEntry>& entries) {
    std::vector<RhoEntry> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back({-e.x, e.k});
    return out;
}

std::vector<RhoEntry> NormalForm::flatten() const {
    std::vector<RhoEntry> out;
    for (const auto& b : blocks) out.insert(out.end(), b.entries.begin(), b.entries.end());
    return out;
}

NormalForm normal_form(const std::vector<RhoEntry>& entries) {
    NormalForm nf;
    for (const auto& e : entries) {
        if (!nf.blocks.empty() && e.x == nf.blocks.back().end() - 1) {
            Block& b = nf.blocks.back();
            if (e.k > b.entries.back().k)
                throw Error(ErrorKind::not_normalizable, "normal_form: order increases inside the block starting at " +
                                                             b.start().str());
            b.entries.push_back(e);
            continue;
        }
        if (!nf.blocks.empty() && !(nf.blocks.back().start() < e.x))
            throw Error(ErrorKind::not_normalizable, "normal_form: block start " + e.x.str() + " does not increase");
        nf.blocks.push_back(Block{{e}});
    }
    return nf;
}

NormalForm normal_form(const RhoData& data) {
    if (data.epsilon != Sign::minus) throw Error(ErrorKind::precondition_failed, "normal_form: needs minus-data");
    return normal_form(data.entries);
}

bool is_tempered_by_data(const ClassicalRep& rep) {
    for (const auto& rho : support_labels(rep)) {
        NormalForm nf = normal_form(rho_data(rep, Sign::minus, rho));
        for (const auto& b : nf.blocks)
            if (b.start() + b.end() < HalfInt(0)) return false;
    }
    return true;
}

StripResult strip_segment(const NormalForm& data, const CuspLabel& rho, std::size_t block_index) {
    if (block_index >= data.blocks.size())
        throw Error(ErrorKind::precondition_failed, "strip_segment: no block " + std::to_string(block_index));
    const Block& target = data.blocks[block_index];
    HalfInt sum = target.start() + target.end();
    if (!(sum < HalfInt(0)))
        throw Error(ErrorKind::precondition_failed, "strip_segment: block has non-negative exponent sum");
    for (std::size_t j = 0; j < block_index; ++j) {
        const Block& b = data.blocks[j];
        if (b.start() + b.end() < sum)
            throw Error(ErrorKind::precondition_failed, "strip_segment: an earlier block has a smaller sum");
    }
    StripResult out{Segment{rho, target.start(), target.end()}, NormalForm{}};
    for (std::size_t j = 0; j < data.blocks.size(); ++j) {
        if (j != block_index) {
            out.data.blocks.push_back(data.blocks[j]);
            continue;
        }
        Block nb;
        for (auto e : target.entries)
            if (--e.k > 0) nb.entries.push_back(e);
        if (!nb.entries.empty()) out.data.blocks.push_back(std::move(nb));
    }
    return out;
}

GLData gl_part_from_data(const NormalForm& data, const CuspLabel& rho) {
    GLData gl;
    for (const auto& b : data.blocks) {
        for (std::size_t j = 0; j < b.entries.size(); ++j) {
            if (!(b.start() + b.entries[j].x < HalfInt(0))) continue;
            int next = j + 1 < b.entries.size() ? b.entries[j + 1].k : 0;
            gl.add(Segment{rho, b.start(), b.entries[j].x}, b.entries[j].k - next);
        }
    }
    return gl;
}

LanglandsFromData langlands_from_data(const std::map<std::string, std::pair<CuspLabel, NormalForm>>& all) {
    LanglandsFromData out;
    std::vector<Segment> segs;
    for (const auto& [name, entry] : all) {
        const auto& [rho, nf] = entry;
        NormalForm cur = nf;
        std::vector<Segment> mine;
        while (true) {
            std::size_t pick = cur.blocks.size();
            HalfInt best;
            for (std::size_t j = 0; j < cur.blocks.size(); ++j) {
                HalfInt s = cur.blocks[j].start() + cur.blocks[j].end();
                if (s < HalfInt(0) && (pick == cur.blocks.size() || s < best)) {
                    pick = j;
                    best = s;
                }
            }
            if (pick == cur.blocks.size()) break;
            StripResult r = strip_segment(cur, rho, pick);
            mine.push_back(r.segment);
            cur = std::move(r.data);
        }
        if (!(GLData(mine) == gl_part_from_data(nf, rho)))
            throw Error(ErrorKind::internal,
                        "langlands_from_data: stripping disagrees with the block formula for " + name);
        segs.insert(segs.end(), mine.begin(), mine.end());
        out.residual.emplace(name, std::move(cur));
    }
    out.gl = GLData(std::move(segs));
    return out;
}

std::string format_entries(const std::vector<RhoEntry>& entries) {
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += "(" + entries[i].x.str() + "," + std::to_string(entries[i].k) + ")";
    }
    return s;
}

}  // namespace hdual
