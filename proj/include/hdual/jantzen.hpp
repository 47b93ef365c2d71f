#pragma once

#include "hdual/corab.hpp"
#include "hdual/rep.hpp"

namespace hdual {

/// Highest derivative of rep at rho|.|^x.
///
/// x > 0 on a good line runs Jantzen's seven steps; x < 0 is the GL left
/// derivative; x = 0 adds the GL order to the tempered one. Non-self-dual labels
/// and bad lines go through the GL models of rep.hpp.
DerivativeResult highest_derivative(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x);

/// Unique irreducible subrepresentation of (rho|.|^x)^k x rep.
/// Throws AmbiguousAtZero for x = 0 and self-dual rho.
ClassicalRep socle_of_rho_power(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x, int k);

}  // namespace hdual
