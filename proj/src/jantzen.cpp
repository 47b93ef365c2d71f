#include "hdual/jantzen.hpp"

#include "hdual/glrep.hpp"
#include "hdual/tempered.hpp"

#include <optional>

namespace hdual {

namespace {

struct Split {
    int a = 0;
    int b = 0;
    GLData rest;  // no Delta[x-1,-x] and right order 0 at -x
};

// Steps (1)-(2): b copies of Delta[x-1,-x], then (rho|.|^{-x})^a from the right.
Split split_family(const GLData& gl, const CuspLabel& rho, HalfInt x) {
    Split s;
    Segment delta_seg{rho, x - 1, -x};
    GLData rest = gl;
    s.b = rest.remove(delta_seg, rest.count(delta_seg));
    auto r = gl_right_highest(rest, rho, -x);
    s.a = r.order;
    s.rest = std::move(r.result);
    return s;
}

GLData assemble(GLData tau, const CuspLabel& rho, HalfInt x, int b) {
    tau.add(Segment{rho, x - 1, -x}, b);
    for (const auto& s : tau)
        if (!(s.center2() < HalfInt(0)))
            throw Error(ErrorKind::internal, "highest_derivative: segment " + s.rho.name + "[" + s.x.str() + "," +
                                                 s.y.str() + "] lost its negative exponent");
    return tau;
}

DerivativeResult good_line(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x) {
    DerivativeResult out;
    out.rep = rep;
    Split sp = split_family(rep.gl, rho, x);
    ABFamily fam{sp.a, sp.b, x, rho, rep.tempered};
    FamilyDerivative d1 = cor_ab(fam);

    Segment point{rho, x, x};
    GLData with_points = sp.rest;
    with_points.add(point, d1.order);
    auto step4 = gl_left_highest(with_points, rho, x);
    if (step4.order == 0) return out;

    GLData tau4 = step4.result;
    int k2 = tau4.remove(point, tau4.count(point));
    if (k2 > d1.order) throw Error(ErrorKind::internal, "highest_derivative: step (5) kept too many points");
    ABFamily fam2 = cor_kprime(fam, k2);
    GLData tau5 = gl_right_underivative(tau4, rho, -x, fam2.a);

    out.order = step4.order;
    out.rep = ClassicalRep{assemble(std::move(tau5), rho, x, fam2.b), fam2.tempered};
    return out;
}

// The family P with cor_ab(P) = (k, target), found by search over nearby data.
ABFamily family_socle(const ABFamily& target, int k) {
    if (k == 0) return target;
    const CuspLabel& rho = target.rho;
    const HalfInt x = target.x;
    const int a1 = static_cast<int>(x.twice()) + 1;
    const int a0 = a1 - 2;
    const long long want_rank = target.to_rep().rank() + static_cast<long long>(k) * rho.dim;

    TemperedParam base = target.tempered;
    int mp0 = base.multiplicity(rho, a1);
    int mm0 = a0 > 0 ? base.multiplicity(rho, a0) : 0;
    if (mp0) base.remove(rho, a1, mp0);
    if (mm0) base.remove(rho, a0, mm0);

    std::optional<ABFamily> found;
    int a_hi = x == half ? 0 : target.a + k;
    int mm_hi = a0 > 0 ? mm0 + k + 2 : 0;
    for (int a = target.a; a <= a_hi; ++a) {
        for (int b = std::max(target.b - 1, 0); b <= target.b + 1; ++b) {
            for (int mp = 0; mp <= mp0 + k + 2; ++mp) {
                for (int mm = 0; mm <= mm_hi; ++mm) {
                    for (int signs = 0; signs < 4; ++signs) {
                        Sign sp = (signs & 1) ? Sign::minus : Sign::plus;
                        Sign sm = (signs & 2) ? Sign::minus : Sign::plus;
                        if (mp == 0 && (signs & 1)) continue;
                        if (mm == 0 && (signs & 2)) continue;
                        TemperedParam t = base;
                        t.add(rho, a1, sp, mp);
                        if (a0 > 0) t.add(rho, a0, sm, mm);
                        if (validate(t)) continue;
                        ABFamily p{a, b, x, rho, t};
                        if (p.to_rep().rank() != want_rank) continue;
                        FamilyDerivative d = cor_ab(p);
                        if (d.order != k || !(d.family == target)) continue;
                        if (found && !(*found == p))
                            throw Error(ErrorKind::internal, "socle_of_rho_power: two families share a derivative");
                        found = p;
                    }
                }
            }
        }
    }
    if (!found) throw Error(ErrorKind::internal, "socle_of_rho_power: no family has the requested derivative");
    return *found;
}

ClassicalRep good_line_socle(const ClassicalRep& base, const CuspLabel& rho, HalfInt x, int total) {
    Split sp = split_family(base.gl, rho, x);
    ABFamily g{sp.a, sp.b, x, rho, base.tempered};
    FamilyDerivative g0 = cor_ab(g);

    Segment point{rho, x, x};
    GLData tau3 = sp.rest;
    tau3.add(point, g0.order);
    GLData up = gl_left_underivative(tau3, rho, x, total);
    int k1 = up.remove(point, up.count(point));
    ABFamily p = family_socle(g0.family, k1);
    GLData tau1 = gl_right_underivative(up, rho, -x, p.a);
    return ClassicalRep{assemble(std::move(tau1), rho, x, p.b), p.tempered};
}

}  // namespace

DerivativeResult highest_derivative(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x) {
    if (!rho.self_dual()) return model_highest_derivative(rep, rho, x);

    if (x < HalfInt(0)) {
        DerivativeResult out;
        auto r = gl_left_highest(rep.gl, rho, x);
        out.order = r.order;
        out.rep = ClassicalRep{std::move(r.result), rep.tempered};
        return out;
    }
    if (x == HalfInt(0)) {
        // Every copy of rho x S_1 in the tempered part enters as a point rho|.|^0 next
        // to the GL part. Segments starting at -1 absorb some of them and each pair of
        // surviving points gives one order.
        const int k = tempered_highest_derivative(rep.tempered, rho, x).order;
        const int m = parity_same_type(rho, 1, rep.group()) ? rep.tempered.multiplicity(rho, 1) : 2 * k;
        const Segment point{rho, HalfInt(0), HalfInt(0)};
        GLData padded = rep.gl;
        padded.add(point, m);
        auto r = gl_left_highest(padded, rho, x);
        const int free_points = m - r.result.count(point);
        const int j = free_points / 2;
        r.result.remove(point, m);
        DerivativeResult out;
        out.order = r.order - free_points + j;
        out.rep = ClassicalRep{std::move(r.result), rep.tempered};
        if (j > 0) {
            if (parity_same_type(rho, 1, rep.group())) {
                out.rep.tempered.remove(rho, 1, 2 * j);
                bool full = j == k && rep.tempered.multiplicity(rho, 1) % 2 == 0;
                out.multiplicity = full ? (1 << (j - 1)) : (1 << j);
            } else {
                out.rep.tempered.remove_pair(rho, 1, j);
                out.multiplicity = 1 << j;
            }
        }
        if (j < k || (out.order > j && parity_same_type(rho, 1, rep.group()) && rep.tempered.multiplicity(rho, 1) == 0))
            out.warnings.push_back("unverified-case");
        return out;
    }
    if (line_kind(rho, x, rep.group()) == LineKind::bad) return model_highest_derivative(rep, rho, x);
    return good_line(rep, rho, x);
}

ClassicalRep socle_of_rho_power(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x, int k) {
    if (k <= 0) return rep;
    if (x == HalfInt(0) && rho.self_dual())
        throw Error(ErrorKind::ambiguous_at_zero,
                    "socle_of_rho_power: rho|.|^0 is conjugate-self-dual, the socle is not determined");
    DerivativeResult d = highest_derivative(rep, rho, x);
    const int total = k + d.order;
    const ClassicalRep& base = d.rep;
    if (!rho.self_dual()) return model_socle(base, rho, x, total);
    if (x < HalfInt(0)) return ClassicalRep{gl_left_underivative(base.gl, rho, x, total), base.tempered};
    if (line_kind(rho, x, rep.group()) == LineKind::bad) return model_socle(base, rho, x, total);
    return good_line_socle(base, rho, x, total);
}

}  // namespace hdual
