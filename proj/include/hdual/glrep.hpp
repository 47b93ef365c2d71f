#pragma once

#include "hdual/core.hpp"

#include <vector>

namespace hdual {

struct GLDerivativeResult {
    int order = 0;
    GLData result;
};

/// Delta x Delta' is reducible: same rho, no containment, union is a segment.
bool segments_linked(const Segment& s1, const Segment& s2);

/// Highest left derivative at rho|.|^x.
GLDerivativeResult gl_left_highest(const GLData& data, const CuspLabel& rho, HalfInt x);
/// Highest right derivative at rho|.|^y.
GLDerivativeResult gl_right_highest(const GLData& data, const CuspLabel& rho, HalfInt y);

/// Inverse of gl_left_highest: the D with gl_left_highest(D, rho, x) = (k, data).
/// data must itself have left order 0 at x.
GLData gl_left_underivative(const GLData& data, const CuspLabel& rho, HalfInt x, int k);
/// Inverse of gl_right_highest; data must have right order 0 at y.
GLData gl_right_underivative(const GLData& data, const CuspLabel& rho, HalfInt y, int a);

struct LadderTerm {
    HalfInt exponent;
    GLData rest;
    bool operator==(const LadderTerm& o) const { return exponent == o.exponent && rest == o.rest; }
};

bool is_ladder(const GLData& data, const CuspLabel& rho);
/// Depth-one left Jacquet terms rho|.|^e (x) L(...) of a ladder.
std::vector<LadderTerm> ladder_jacquet_left(const GLData& ladder, const CuspLabel& rho);
/// Depth-one right Jacquet terms L(...) (x) rho|.|^e of a ladder.
std::vector<LadderTerm> ladder_jacquet_right(const GLData& ladder, const CuspLabel& rho);

/// Zelevinsky involution on the rho-part, read off from iterated right derivatives
/// taken at the smallest available exponent. Other labels are left alone.
GLData gl_zelevinsky_dual(const GLData& data, const CuspLabel& rho);

}  // namespace hdual
