#pragma once

#include "hdual/arthur.hpp"
#include "hdual/rep.hpp"

#include <vector>

namespace hdual {

/// Highest derivative of pi(phi, eta) at rho|.|^x. Negative x gives order 0.
DerivativeResult tempered_highest_derivative(const TemperedParam& phi, const CuspLabel& rho, HalfInt x);

/// Undoes the last entry (x, k), x >= 0, of the minus-data of a tempered representation
/// whose remaining terminal is pi(phi1, eta1). At x = 0 both signs of a new rho may come back.
std::vector<TemperedParam> ml_reconstruct(HalfInt x, int k, const TemperedParam& terminal, const CuspLabel& rho);

/// Rebuilds every tempered pi with the given minus-data on the good line of rho.
/// Entries with x < 0 consume the run (x', k'), (x'-1, 1), ..., (-x', 1) before them.
/// With check_valid false, partial parameters (one line only) are returned unfiltered.
std::vector<TemperedParam> ml_reconstruct_chain(const std::vector<RhoEntry>& entries, const TemperedParam& terminal,
                                                const CuspLabel& rho, bool check_valid = true);

/// Irreducibility of rho|.|^{(a-1)/2} x pi(phi, eta), rho (x) S_a of good parity, a >= 2.
bool irr_rho_induction(const TemperedParam& phi, const CuspLabel& rho, int a);

enum class DeltaVariant { plain, with_delta01 };
enum class Irreducibility { irreducible, reducible, undetermined };

/// plain: Delta_rho[x-1,-x] x pi(phi, eta).
/// with_delta01: Delta_rho[x-1,-x] x L(Delta_rho[0,-1]; pi(phi, eta)); only the
/// equal-sign situation is decided, everything else is undetermined.
Irreducibility irr_delta_induction(const TemperedParam& phi, const CuspLabel& rho, HalfInt x, DeltaVariant variant);

/// rho|.|^{-1} x L((rho|.|^{-1})^a; pi(phi, eta)) is irreducible; rho of good parity.
bool irr1(const TemperedParam& phi, const CuspLabel& rho, int a);

}  // namespace hdual
