#pragma once

#include "hdual/arthur.hpp"
#include "hdual/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hdual {

/// Langlands data L(tau_1, ..., tau_r; pi(phi, eta)) of SO_{2n+1} (B) or Sp_{2n} (C).
struct ClassicalRep {
    GLData gl;  // every segment has x + y < 0
    TemperedParam tempered;

    Group group() const { return tempered.group(); }
    bool is_tempered() const { return gl.empty(); }
    long long rank() const;
    bool operator==(const ClassicalRep& o) const { return gl == o.gl && tempered == o.tempered; }
};

inline ClassicalRep tempered_rep(TemperedParam phi) { return ClassicalRep{GLData(), std::move(phi)}; }

std::optional<std::string> validate(const ClassicalRep& rep);

/// One step (x, k) of a rho-data list.
struct RhoEntry {
    HalfInt x;
    int k = 0;
    bool operator==(const RhoEntry& o) const { return x == o.x && k == o.k; }
};

struct DerivativeResult {
    int order = 0;
    ClassicalRep rep;
    int multiplicity = 1;
    std::vector<std::string> warnings;
};

/// Exponents of the supercuspidal support, with both sides of every GL factor.
std::vector<SupportPoint> cuspidal_support(const ClassicalRep& rep);

/// Labels occurring in rep, each dual pair represented by both members.
std::vector<CuspLabel> support_labels(const ClassicalRep& rep);

enum class LineKind { good, bad, non_selfdual };

/// Kind of the line through rho|.|^x: good when rho (x) S_{2|x|+1} has good parity.
LineKind line_kind(const CuspLabel& rho, HalfInt x, Group group);

// GL models. A non-self-dual pair {rho, rho^v} is encoded by a multisegment on
// pair_label(rho): rho-segments as they are, rho^v-segments through their duals
// [-y,-x], and each non-good-parity pair (a) as [z,-z] with a = 2z+1.
// A bad line of a self-dual rho uses the same recipe with both a segment and its
// dual present, so each pair gives [z,-z] twice.

GLData nsd_model(const ClassicalRep& rep, const CuspLabel& rho);
/// Replaces the content of the pair {rho, rho^v} of base by the model t.
ClassicalRep nsd_restore(const ClassicalRep& base, const GLData& t, const CuspLabel& rho);

GLData bad_line_model(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x);
ClassicalRep bad_line_restore(const ClassicalRep& base, const GLData& t, const CuspLabel& rho, HalfInt x);

/// Highest derivative on a non-self-dual label (any x) or on a bad line (x > 0).
DerivativeResult model_highest_derivative(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x);
/// Inverse of model_highest_derivative.
ClassicalRep model_socle(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x, int k);

/// [x,y] on rho becomes [-y,-x] on rho^v.
Segment dual_segment(const Segment& s);

}  // namespace hdual
