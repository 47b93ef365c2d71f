#include "hdual/oracle.hpp"

#include "hdual/jantzen.hpp"

#include <algorithm>

namespace hdual {

int xgt1_order_via_recursion(const ABFamily& fam) {
    if (!(fam.x > HalfInt(1))) throw Error(ErrorKind::precondition_failed, "xgt1_order_via_recursion: needs x > 1");
    check_family(fam);
    const HalfInt below = fam.x - 1;
    DerivativeResult a = highest_derivative(fam.to_rep(), fam.rho, below);
    DerivativeResult b = highest_derivative(a.rep, fam.rho, fam.x);
    DerivativeResult g = highest_derivative(b.rep, fam.rho, below);
    return std::max(b.order - a.order - g.order, 0) + g.order;
}

int depth1_jacquet_count(const GLData& tau, const CuspLabel& rho, HalfInt x, int pi_terms) {
    int n = pi_terms;
    for (const auto& s : tau) {
        if (s.rho == rho && s.x == x) ++n;
        if (s.rho.dual() == rho && -s.y == x) ++n;
    }
    return n;
}

}  // namespace hdual
