#pragma once

#include "hdual/corab.hpp"

namespace hdual {

/// max{beta - alpha - gamma, 0} + gamma, where alpha, beta, gamma are the highest
/// orders at x-1, then x, then x-1 again. Needs x > 1.
int xgt1_order_via_recursion(const ABFamily& fam);

/// Number of depth-one terms of tau x pi starting with rho|.|^x. Each segment of
/// tau counts once for its start and once for its dual end; pi_terms is the
/// number of such terms in the Jacquet module of pi itself.
int depth1_jacquet_count(const GLData& tau, const CuspLabel& rho, HalfInt x, int pi_terms = 0);

}  // namespace hdual
