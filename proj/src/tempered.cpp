#include "hdual/tempered.hpp"

namespace hdual {

namespace {

int dim_at(HalfInt x) { return static_cast<int>(x.twice()) + 1; }

int pow2(int k) { return k <= 0 ? 1 : (1 << k); }

// Adds copies of rho (x) S_a; a fresh isotype takes the sign s.
void put(TemperedParam& phi, const CuspLabel& rho, int a, int count, Sign s) {
    if (a == 0 || count <= 0) return;
    phi.add(rho, a, phi.sign_of(rho, a).value_or(s), count);
}

void take(TemperedParam& phi, const CuspLabel& rho, int a, int count) {
    if (a == 0 || count <= 0) return;
    phi.remove(rho, a, count);
}

[[noreturn]] void ml_fail(const std::string& what) {
    throw Error(ErrorKind::ml_precondition_failed, "ml_reconstruct: " + what);
}

}  // namespace

DerivativeResult tempered_highest_derivative(const TemperedParam& phi, const CuspLabel& rho, HalfInt x) {
    DerivativeResult out;
    out.rep = tempered_rep(phi);
    if (x < HalfInt(0)) return out;
    if (!rho.self_dual()) return model_highest_derivative(out.rep, rho, x);

    if (x == HalfInt(0)) {
        TemperedParam next = phi;
        if (parity_same_type(rho, 1, phi.group())) {
            int m = phi.multiplicity(rho, 1);
            int k = m / 2;
            if (k == 0) return out;
            take(next, rho, 1, 2 * k);
            out.order = k;
            out.multiplicity = (m % 2 == 0) ? pow2(k - 1) : pow2(k);
        } else {
            int k = phi.pairs(rho, 1);
            if (k == 0) return out;
            next.remove_pair(rho, 1, k);
            out.order = k;
            out.multiplicity = pow2(k);
        }
        out.rep = tempered_rep(std::move(next));
        return out;
    }

    if (line_kind(rho, x, phi.group()) == LineKind::bad) return model_highest_derivative(out.rep, rho, x);

    const int a1 = dim_at(x);
    const int a0 = a1 - 2;
    const int m = phi.multiplicity(rho, a1);
    if (m == 0) return out;
    Sign s1 = *phi.sign_of(rho, a1);
    auto s0 = phi.sign_of(rho, a0);
    bool vanish = phi.multiplicity(rho, a0) > 0 && s0 && *s0 != s1;

    TemperedParam next = phi;
    if (!vanish) {
        take(next, rho, a1, m);
        put(next, rho, a0, m, s0.value_or(s1));
        out.order = m;
        out.rep = tempered_rep(std::move(next));
        return out;
    }
    out.order = m - 1;
    if (m % 2 == 1) {
        take(next, rho, a1, m - 1);
        put(next, rho, a0, m - 1, *s0);
        out.rep = tempered_rep(std::move(next));
    } else {
        take(next, rho, a1, m);
        put(next, rho, a0, m - 2, *s0);
        GLData gl;
        gl.add(Segment{rho, x - 1, -x});
        out.rep = ClassicalRep{std::move(gl), std::move(next)};
    }
    return out;
}

std::vector<TemperedParam> ml_reconstruct(HalfInt x, int k, const TemperedParam& terminal, const CuspLabel& rho) {
    if (x < HalfInt(0)) ml_fail("negative x needs the surrounding entries; use ml_reconstruct_chain");
    if (line_kind(rho, x, terminal.group()) != LineKind::good) ml_fail("rho is not of good parity on this line");
    if (k <= 0) ml_fail("order must be positive");

    if (x == HalfInt(0)) {
        std::vector<TemperedParam> out;
        if (auto s = terminal.sign_of(rho, 1)) {
            TemperedParam next = terminal;
            next.add(rho, 1, *s, 2 * k);
            out.push_back(next);
            return out;
        }
        for (Sign s : {Sign::plus, Sign::minus}) {
            TemperedParam next = terminal;
            next.add(rho, 1, s, 2 * k);
            out.push_back(next);
        }
        return out;
    }

    const int a1 = dim_at(x);
    const int a0 = a1 - 2;
    const int m0 = terminal.multiplicity(rho, a0);
    if (a0 > 0 && m0 < k) ml_fail("multiplicity of S_" + std::to_string(a0) + " is below " + std::to_string(k));
    auto s1 = terminal.sign_of(rho, a1);
    auto s0 = terminal.sign_of(rho, a0);
    if (terminal.multiplicity(rho, a1) > 0 && s0 && *s1 != *s0 && k % 2 != 0)
        ml_fail("sign clash at S_" + std::to_string(a1) + " needs an even order");
    Sign fresh = s1 ? *s1 : s0.value_or(Sign::plus);
    TemperedParam next = terminal;
    take(next, rho, a0, k);
    put(next, rho, a1, k, fresh);
    return {next};
}

std::vector<TemperedParam> ml_reconstruct_chain(const std::vector<RhoEntry>& entries, const TemperedParam& terminal,
                                                const CuspLabel& rho, bool check_valid) {
    struct Branch {
        std::size_t len;  // entries still to undo
        TemperedParam phi;
    };
    std::vector<Branch> work{{entries.size(), terminal}};
    std::vector<TemperedParam> done;
    std::string first_error;
    while (!work.empty()) {
        Branch b = std::move(work.back());
        work.pop_back();
        if (b.len == 0) {
            if (!check_valid || !validate(b.phi)) done.push_back(std::move(b.phi));
            continue;
        }
        try {
            const RhoEntry& last = entries[b.len - 1];
            if (last.x >= HalfInt(0)) {
                for (auto& c : ml_reconstruct(last.x, last.k, b.phi, rho)) work.push_back({b.len - 1, std::move(c)});
                continue;
            }
            HalfInt x = -last.x;
            if (line_kind(rho, x, b.phi.group()) != LineKind::good) ml_fail("rho is not of good parity on this line");
            const std::size_t run = static_cast<std::size_t>(x.twice()) + 1;
            if (b.len < run) ml_fail("negative entry without its run");
            const std::size_t head = b.len - run;
            // The run (x, k'), (x-1, k_2), ..., (-x, k_{2x+1}) comes from a tempered pi_2 whose
            // derivative at x is L(Delta[x-1,-x]; sigma). The Delta takes one from every entry
            // below the top; what is left is the minus-data of sigma over the current terminal.
            const RhoEntry& top = entries[head];
            if (top.x != x || top.k % 2 == 0) ml_fail("run must start at an odd order");
            std::vector<RhoEntry> rest;
            for (std::size_t i = 1; i < run; ++i) {
                const RhoEntry& e = entries[head + i];
                if (e.x != x - HalfInt(static_cast<int>(i)) || e.k > entries[head + i - 1].k)
                    ml_fail("negative entry without a decreasing run above it");
                if (e.k > 1) rest.push_back({e.x, e.k - 1});
            }
            std::vector<TemperedParam> sigmas =
                rest.empty() ? std::vector<TemperedParam>{b.phi} : ml_reconstruct_chain(rest, b.phi, rho, false);
            const int a1 = dim_at(x);
            const int a0 = a1 - 2;
            for (auto& sigma : sigmas) {
                if (sigma.multiplicity(rho, a1) > 0) continue;
                if (a0 > 0 && sigma.multiplicity(rho, a0) < top.k) continue;
                Sign s0 = sigma.sign_of(rho, a0).value_or(Sign::plus);
                take(sigma, rho, a0, top.k - 1);
                sigma.add(rho, a1, -s0, top.k + 1);
                work.push_back({head, std::move(sigma)});
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ml_precondition_failed) throw;
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (done.empty())
        throw Error(ErrorKind::ml_precondition_failed,
                    first_error.empty() ? "ml_reconstruct_chain: no valid parameter" : first_error);
    return done;
}

bool irr_rho_induction(const TemperedParam& phi, const CuspLabel& rho, int a) {
    if (a < 2 || !parity_same_type(rho, a, phi.group()))
        throw Error(ErrorKind::precondition_failed, "irr_rho_induction: rho (x) S_a must have good parity, a >= 2");
    int below = phi.multiplicity(rho, a - 2);
    if (below == 0) return true;
    if (below >= 2) return false;
    if (phi.multiplicity(rho, a) == 0) return false;
    return *phi.sign_of(rho, a) != *phi.sign_of(rho, a - 2);
}

Irreducibility irr_delta_induction(const TemperedParam& phi, const CuspLabel& rho, HalfInt x, DeltaVariant variant) {
    if (x < HalfInt(1) || line_kind(rho, x, phi.group()) != LineKind::good)
        throw Error(ErrorKind::precondition_failed, "irr_delta_induction: needs x >= 1 on a good line");
    const int a1 = dim_at(x);
    const int a0 = a1 - 2;
    bool both = phi.multiplicity(rho, a1) > 0 && phi.multiplicity(rho, a0) > 0;
    bool differ = both && *phi.sign_of(rho, a1) != *phi.sign_of(rho, a0);
    if (variant == DeltaVariant::plain) return differ ? Irreducibility::irreducible : Irreducibility::reducible;
    if (both && !differ) return Irreducibility::irreducible;
    return Irreducibility::undetermined;
}

bool irr1(const TemperedParam& phi, const CuspLabel& rho, int a) {
    if (!parity_same_type(rho, 1, phi.group()))
        throw Error(ErrorKind::precondition_failed, "irr1: rho must be of the same type as phi");
    int d3 = delta(phi, rho, 3);
    return a >= phi.multiplicity(rho, 1) - d3;
}

}  // namespace hdual
