#include "hdual/aubert.hpp"

#include "hdual/glrep.hpp"
#include "hdual/jantzen.hpp"
#include "hdual/notation.hpp"
#include "hdual/rhodata.hpp"
#include "hdual/tempered.hpp"

#include <map>
#include <set>

namespace hdual {

namespace {

[[noreturn]] void recon_fail(const std::string& what) {
    throw Error(ErrorKind::reconstruction_failed, "aubert_dual: " + what);
}

// One independent part of the dual: GL segments plus the possible tempered pieces.
struct Piece {
    GLData gl;
    std::vector<TemperedParam> options;
};

bool line_of(const GPEntry& e, HalfInt x) { return same_line(HalfInt::from_twice(e.a - 1), x); }

Piece good_line_piece(const ClassicalRep& rep, const CuspLabel& rho, HalfInt line) {
    RhoData d = rho_data(rep, Sign::plus, rho);
    std::vector<RhoEntry> entries;
    for (const auto& e : d.entries)
        if (same_line(e.x, line)) entries.push_back(e);
    for (const auto& s : d.terminal.gl)
        if (s.rho == rho && same_line(s.x, line))
            recon_fail("terminal of the plus-data still carries " + print_segment(s));
    TemperedParam t0(rep.group());
    for (const auto& e : d.terminal.tempered.gp())
        if (e.rho == rho && line_of(e, line)) t0.add(rho, e.a, e.sign, e.count);

    NormalForm nf;
    try {
        nf = normal_form(negate(entries));
    } catch (const Error& e) {
        recon_fail(std::string("negated data of ") + rho.name + " is not normalizable: " + e.what());
    }
    std::map<std::string, std::pair<CuspLabel, NormalForm>> all{{rho.name, {rho, nf}}};
    LanglandsFromData lf = langlands_from_data(all);
    Piece out;
    out.gl = lf.gl;
    try {
        out.options = ml_reconstruct_chain(lf.residual.at(rho.name).flatten(), t0, rho, false);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ml_precondition_failed) throw;
        recon_fail(std::string("no tempered part for ") + rho.name + ": " + e.what());
    }
    return out;
}

Piece model_piece(const ClassicalRep& rep, const CuspLabel& rho, std::optional<HalfInt> bad_line) {
    ClassicalRep base{GLData(), TemperedParam(rep.group())};
    ClassicalRep restored;
    if (bad_line) {
        GLData z = gl_zelevinsky_dual(bad_line_model(rep, rho, *bad_line), rho);
        restored = bad_line_restore(base, z, rho, *bad_line);
    } else {
        CuspLabel c = pair_label(rho);
        GLData z = gl_zelevinsky_dual(nsd_model(rep, rho), c);
        restored = nsd_restore(base, z, rho);
    }
    return Piece{restored.gl, {restored.tempered}};
}

void merge_into(TemperedParam& dst, const TemperedParam& src) {
    for (const auto& e : src.gp()) dst.add(e.rho, e.a, e.sign, e.count);
    for (const auto& e : src.ngp()) dst.add_pair(e.rho, e.a, e.count);
}

void push_unique(std::vector<ClassicalRep>& v, ClassicalRep r) {
    for (const auto& x : v)
        if (x == r) return;
    v.push_back(std::move(r));
}

bool negation_law(const ClassicalRep& rep, const ClassicalRep& cand) {
    try {
        for (const auto& rho : support_labels(rep)) {
            for (Sign eps : {Sign::plus, Sign::minus}) {
                auto mine = negate(rho_data(rep, eps, rho).entries);
                if (!(mine == rho_data(cand, -eps, rho.dual()).entries)) return false;
            }
        }
    } catch (const Error&) {
        return false;
    }
    return true;
}

using Memo = std::map<std::string, std::vector<ClassicalRep>>;

std::vector<ClassicalRep> dual_with_memo(const ClassicalRep& rep, Memo& memo);

// Every prefix of every plus-chain of original must match the minus-chain of the
// candidate, and the two truncated representations must again be dual.
bool prefix_chains_agree(const ClassicalRep& original, const ClassicalRep& cand, Memo& memo) {
    for (const auto& rho : support_labels(original)) {
        RhoData d = rho_data(original, Sign::plus, rho);
        ClassicalRep p = original;
        ClassicalRep q = cand;
        for (const auto& e : d.entries) {
            p = highest_derivative(p, rho, e.x).rep;
            DerivativeResult dq = highest_derivative(q, rho.dual(), -e.x);
            if (dq.order != e.k) return false;
            q = std::move(dq.rep);
            std::vector<ClassicalRep> duals;
            try {
                duals = dual_with_memo(p, memo);
            } catch (const Error&) {
                continue;
            }
            bool found = false;
            for (const auto& c : duals) found = found || c == q;
            if (!found) return false;
        }
    }
    return true;
}

// Keeps the candidates passing keep, unless that would drop all of them.
template <class Pred>
void apply_filter(std::vector<ClassicalRep>& cands, const char* name, std::vector<std::string>* warnings, Pred keep) {
    if (cands.size() < 2) return;
    std::vector<ClassicalRep> kept;
    for (const auto& c : cands) {
        bool ok = false;
        try {
            ok = keep(c);
        } catch (const Error&) {
            ok = false;
        }
        if (ok) kept.push_back(c);
    }
    if (kept.empty()) {
        if (warnings) warnings->push_back(std::string(name) + " rejected every candidate; ignored");
        return;
    }
    cands = std::move(kept);
}

std::vector<ClassicalRep> filter_candidates(std::vector<ClassicalRep> cands, const ClassicalRep& original, Memo& memo,
                                            std::vector<std::string>* warnings) {
    apply_filter(cands, "negation check", warnings, [&](const ClassicalRep& c) { return negation_law(original, c); });
    apply_filter(cands, "prefix check", warnings,
                 [&](const ClassicalRep& c) { return prefix_chains_agree(original, c, memo); });
    return cands;
}

std::vector<ClassicalRep> dual_with_memo(const ClassicalRep& rep, Memo& memo) {
    std::string key = print_document(rep);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<ClassicalRep> out = filter_candidates(dual_candidates(rep), rep, memo, nullptr);
    memo.emplace(std::move(key), out);
    return out;
}

}  // namespace

std::vector<ClassicalRep> dual_candidates(const ClassicalRep& rep) {
    if (auto bad = validate(rep)) throw Error(ErrorKind::validation_error, "aubert_dual: " + *bad);
    std::vector<Piece> pieces;
    std::set<std::string> seen_pairs;
    for (const auto& rho : support_labels(rep)) {
        if (!rho.self_dual()) {
            if (seen_pairs.insert(pair_label(rho).name).second) pieces.push_back(model_piece(rep, rho, std::nullopt));
            continue;
        }
        std::set<bool> lines;  // true for the integer line
        for (const auto& p : cuspidal_support(rep))
            if (p.rho == rho) lines.insert(p.z.is_integer());
        for (bool integral : lines) {
            HalfInt line = integral ? HalfInt(0) : half;
            if (line_kind(rho, line, rep.group()) == LineKind::good)
                pieces.push_back(good_line_piece(rep, rho, line));
            else
                pieces.push_back(model_piece(rep, rho, integral ? HalfInt(1) : half));
        }
    }

    std::vector<Segment> gl;
    std::vector<TemperedParam> temps{TemperedParam(rep.group())};
    for (const auto& piece : pieces) {
        gl.insert(gl.end(), piece.gl.begin(), piece.gl.end());
        std::vector<TemperedParam> next;
        for (const auto& t : temps) {
            for (const auto& o : piece.options) {
                TemperedParam m = t;
                merge_into(m, o);
                next.push_back(std::move(m));
            }
        }
        temps = std::move(next);
    }
    std::vector<ClassicalRep> out;
    GLData gl_data(std::move(gl));
    for (auto& t : temps) {
        ClassicalRep c{gl_data, std::move(t)};
        if (!validate(c)) push_unique(out, std::move(c));
    }
    if (out.empty()) recon_fail("no candidate passes validation");
    return out;
}

DualResult disambiguate(const std::vector<ClassicalRep>& candidates, const ClassicalRep& original) {
    DualResult out;
    Memo memo;
    out.candidates = filter_candidates(candidates, original, memo, &out.warnings);
    out.resolved = out.candidates.size() == 1;
    return out;
}

DualResult aubert_dual(const ClassicalRep& rep) { return disambiguate(dual_candidates(rep), rep); }

}  // namespace hdual
