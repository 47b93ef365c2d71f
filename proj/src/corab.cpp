#include "hdual/corab.hpp"

#include <algorithm>

namespace hdual {

namespace {

struct Counts {
    int a1 = 0;  // 2x+1
    int a0 = 0;  // 2x-1
    int mp = 0;  // m_{2x+1}
    int mm = 0;  // m_{2x-1}, 1 at x = 1/2
    int kappa = 0;
    int delta = 0;
    Sign s1 = Sign::plus;
    bool case3 = false;
};

Counts counts_of(const ABFamily& fam) {
    Counts c;
    c.a1 = static_cast<int>(fam.x.twice()) + 1;
    c.a0 = c.a1 - 2;
    c.mp = fam.tempered.multiplicity(fam.rho, c.a1);
    c.mm = fam.tempered.multiplicity(fam.rho, c.a0);
    c.kappa = fam.b % 2;
    c.delta = delta(fam.tempered, fam.rho, c.a1);
    if (c.mp > 0) c.s1 = *fam.tempered.sign_of(fam.rho, c.a1);
    c.case3 = c.mp > 0 && c.mm == 0;
    return c;
}

// phi' + S_{2x+1}^plus - S_{2x-1}^minus, with phi' = phi - S_{2x+1}^mp + S_{2x-1}^mp.
TemperedParam shifted(const ABFamily& fam, const Counts& c, int plus, int minus) {
    TemperedParam t = fam.tempered;
    const CuspLabel& rho = fam.rho;
    Sign low = c.case3 ? sign_power(Sign::minus, fam.b) * c.s1 : c.s1;
    if (c.mp > 0) t.remove(rho, c.a1, c.mp);
    if (c.a0 > 0 && c.mp > 0) t.add(rho, c.a0, t.sign_of(rho, c.a0).value_or(low), c.mp);
    if (plus > 0) t.add(rho, c.a1, t.sign_of(rho, c.a1).value_or(c.s1), plus);
    if (c.a0 > 0 && minus > 0) t.remove(rho, c.a0, minus);
    if (c.a0 > 0 && minus < 0) t.add(rho, c.a0, t.sign_of(rho, c.a0).value_or(low), -minus);
    return t;
}

ABFamily with(const ABFamily& fam, int a, int b, TemperedParam t) {
    ABFamily r = fam;
    r.a = a;
    r.b = b;
    r.tempered = std::move(t);
    return r;
}

}  // namespace

ClassicalRep ABFamily::to_rep() const {
    GLData gl;
    gl.add(Segment{rho, -x, -x}, a);
    gl.add(Segment{rho, x - 1, -x}, b);
    return ClassicalRep{std::move(gl), tempered};
}

void check_family(const ABFamily& fam) {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::invalid_family, "check_family: " + what); };
    if (fam.x < half) fail("x must be at least 1/2");
    if (fam.a < 0 || fam.b < 0) fail("a and b must be non-negative");
    int a1 = static_cast<int>(fam.x.twice()) + 1;
    if (!parity_same_type(fam.rho, a1, fam.tempered.group()))
        fail("rho (x) S_" + std::to_string(a1) + " is not of good parity");
    if (fam.x == half && fam.a != 0) fail("a must vanish at x = 1/2");
    if (auto bad = validate(fam.tempered)) fail(*bad);
}

AParameter psi_of(const ABFamily& fam) {
    Counts c = counts_of(fam);
    AParameter psi;
    psi.group = fam.tempered.group();
    for (const auto& e : fam.tempered.gp()) psi.add(e.rho, e.a, 1, e.count);
    for (const auto& e : fam.tempered.ngp()) {
        psi.add(e.rho, e.a, 1, e.count);
        psi.add(e.rho.dual(), e.a, 1, e.count);
    }
    auto drop = [&](int a) {
        auto it = std::find(psi.summands.begin(), psi.summands.end(), ASummand{fam.rho, a, 1});
        if (it != psi.summands.end()) psi.summands.erase(it);
    };
    int a2 = c.a1 - 1;
    bool clash = c.mp > 0 && c.mm > 0 &&
                 c.s1 * fam.tempered.sign_of(fam.rho, c.a0).value_or(Sign::plus) == sign_power(Sign::minus, fam.b + 1);
    if (clash) {
        drop(c.a1);
        drop(c.a0);
        psi.add(fam.rho, a2, 2, fam.b + 1);
    } else {
        psi.add(fam.rho, a2, 2, fam.b);
    }
    return psi;
}

FamilyDerivative cor_ab(const ABFamily& fam) {
    check_family(fam);
    Counts c = counts_of(fam);
    const int a = fam.a, b = fam.b;
    FamilyDerivative out;
    if (c.mp == 0) {
        int l = std::max(a - c.mm, 0);
        out.order = l;
        out.family = with(fam, a - l, b, fam.tempered);
        return out;
    }
    if (c.mm > 0) {
        if (c.kappa != c.delta) {
            int l = std::max(a - c.mm + 1, 0);
            out.order = l + c.mp - 1;
            if (c.mp % 2 == 1)
                out.family = with(fam, a - l, b, shifted(fam, c, 1, 1));
            else
                out.family = with(fam, a - l, b + 1, shifted(fam, c, 0, 2));
        } else {
            int l = std::max(a - c.mm, 0);
            out.order = l + c.mp;
            if (c.mp % 2 == 1 && b > 0)
                out.family = with(fam, a - l, b - 1, shifted(fam, c, 1, -1));
            else
                out.family = with(fam, a - l, b, shifted(fam, c, 0, 0));
        }
        return out;
    }
    out.order = a + c.mp;
    if (c.mp % 2 == 0 || b == 0)
        out.family = with(fam, 0, b, shifted(fam, c, 0, 0));
    else
        out.family = with(fam, 0, b - 1, shifted(fam, c, 1, -1));
    return out;
}

ABFamily cor_kprime(const ABFamily& fam, int kprime) {
    FamilyDerivative top = cor_ab(fam);
    if (kprime < 0 || kprime > top.order)
        throw Error(ErrorKind::out_of_range, "cor_kprime: k' = " + std::to_string(kprime) + " outside [0, " +
                                                 std::to_string(top.order) + "]");
    if (kprime == 0) return top.family;
    if (kprime == top.order) return fam;
    Counts c = counts_of(fam);
    const int a = fam.a, b = fam.b, kp = kprime;
    const bool same_parity = (kp % 2) == (c.mp % 2);
    if (c.mp == 0) return with(fam, kp + c.mm, b, fam.tempered);
    if (c.mm > 0) {
        if (c.kappa != c.delta) {
            int a0 = std::min(a, c.mm - 1);
            if (kp < c.mp - 1) {
                if (!same_parity) return with(fam, a0, b, shifted(fam, c, kp + 1, kp + 1));
                return with(fam, a0, b + 1, shifted(fam, c, kp, kp + 2));
            }
            return with(fam, kp - c.mp + c.mm, b, fam.tempered);
        }
        int a0 = std::min(a, c.mm);
        if (kp >= c.mp) return with(fam, kp - c.mp + c.mm, b, fam.tempered);
        if (b == 0 || same_parity) return with(fam, a0, b, shifted(fam, c, kp, kp));
        return with(fam, a0, b - 1, shifted(fam, c, kp + 1, kp - 1));
    }
    if (kp >= c.mp) return with(fam, kp - c.mp, b, fam.tempered);
    if (b == 0 || same_parity) return with(fam, 0, b, shifted(fam, c, kp, kp));
    return with(fam, 0, b - 1, shifted(fam, c, kp + 1, kp - 1));
}

}  // namespace hdual
