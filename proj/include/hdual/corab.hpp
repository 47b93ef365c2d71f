#pragma once

#include "hdual/arthur.hpp"
#include "hdual/rep.hpp"

namespace hdual {

/// L((rho|.|^{-x})^a, Delta_rho[x-1,-x]^b; pi(phi, eta)) with rho (x) S_{2x+1} of good parity.
struct ABFamily {
    int a = 0;
    int b = 0;
    HalfInt x = HalfInt(1);
    CuspLabel rho;
    TemperedParam tempered;

    ClassicalRep to_rep() const;
    bool operator==(const ABFamily& o) const {
        return a == o.a && b == o.b && x == o.x && rho == o.rho && tempered == o.tempered;
    }
};

/// Throws InvalidFamily when the family breaks the parity or x = 1/2 conventions.
void check_family(const ABFamily& fam);

struct FamilyDerivative {
    int order = 0;
    ABFamily family;
};

/// The A-parameter psi attached to L(Delta_rho[x-1,-x]^b; pi(phi, eta)).
AParameter psi_of(const ABFamily& fam);

/// Highest derivative at rho|.|^x, read off from the case tables.
FamilyDerivative cor_ab(const ABFamily& fam);

/// Unique irreducible subrepresentation of (rho|.|^x)^{k'} x D^{(k)}(fam), 0 <= k' <= k.
ABFamily cor_kprime(const ABFamily& fam, int kprime);

}  // namespace hdual
