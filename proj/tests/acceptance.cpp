// Acceptance runner: one pass/fail line per criterion, non-zero exit on any failure.
#include "gen.hpp"
#include "hdual/aubert.hpp"
#include "hdual/glrep.hpp"
#include "hdual/jantzen.hpp"
#include "hdual/oracle.hpp"
#include "hdual/rhodata.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hdual;

namespace {

const CuspLabel& one() { return trivial_label(); }

const char* const big = "pi(one:1:+,one:3:-,one:5:+,one:5:+,one:5:+,one:5:+,one:7:-)";

std::vector<RhoEntry> entries(std::initializer_list<std::pair<int, int>> list) {
    std::vector<RhoEntry> out;
    for (auto [x, k] : list) out.push_back(RhoEntry{HalfInt(x), k});
    return out;
}

// Counts cases and keeps the first few failures for the report.
struct Tally {
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        ++failures;
        if (notes.size() < 3) notes.push_back(what);
    }
    // Runs body; an exception counts as a failed case.
    void guard(const std::string& what, const std::function<bool()>& body) {
        bool ok = false;
        std::string why = what;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why += " threw: " + std::string(e.what());
        }
        check(ok, why);
    }
};

bool data_is(const RhoData& d, const std::vector<RhoEntry>& e, const char* terminal) {
    return d.entries == e && d.terminal == parse_rep(terminal);
}

std::vector<HalfInt> exponents_of(const ClassicalRep& rep, const CuspLabel& rho) {
    std::vector<HalfInt> out;
    for (const auto& p : cuspidal_support(rep))
        if (p.rho == rho && std::find(out.begin(), out.end(), p.z) == out.end()) out.push_back(p.z);
    return out;
}

Tally rho_data_regression() {
    Tally t;
    t.guard("big example", [] {
        return data_is(rho_data(parse_rep(big), Sign::plus, one()),
                       entries({{2, 3}, {3, 1}, {1, 3}, {2, 1}, {0, 2}, {1, 1}, {-1, 1}, {0, 1}, {-2, 1}, {-1, 1}}),
                       "pi(one:1:+)");
    });
    return t;
}

Tally aubert_regressions() {
    Tally t;
    t.guard("big example resolves", [] {
        DualResult d = aubert_dual(parse_rep(big));
        return d.resolved && d.candidates.size() == 1 &&
               d.candidates[0] ==
                   parse_rep("L(D(one,-2,-3),D(one,-2,-2),D(one,-2,-2),D(one,-1,-2),D(one,-1,-1),D(one,-1,-1),"
                             "D(one,0,-1); pi(one:1:-,one:1:-,one:1:-,one:3:-,one:5:+))");
    });
    t.guard("pi(1+,3+,5+)", [] {
        return data_is(rho_data(parse_rep("pi(one:1:+,one:3:+,one:5:+)"), Sign::plus, one()),
                       entries({{2, 1}, {1, 2}, {0, 1}}), "pi(one:1:+)");
    });
    t.guard("pi(1-,3-,5+)", [] {
        return data_is(rho_data(parse_rep("pi(one:1:-,one:3:-,one:5:+)"), Sign::plus, one()),
                       entries({{1, 1}, {2, 1}, {0, 1}, {1, 1}}), "pi(one:1:+)");
    });
    for (const char* eps : {"+", "-"}) {
        std::string text = std::string("L(D(one,0,-2); pi(one:1:") + eps + ",one:1:" + eps + ",one:3:+))";
        t.guard("pi_epsilon " + text, [text] {
            ClassicalRep rep = parse_rep(text);
            DualResult d = aubert_dual(rep);
            return !d.resolved && d.candidates.size() == 2 &&
                   data_is(rho_data(rep, Sign::plus, one()), entries({{0, 2}, {1, 1}, {2, 1}, {-1, 1}}),
                           "pi(one:1:+)");
        });
    }
    return t;
}

Tally oracle_agreement() {
    Tally t;
    std::mt19937 g(1001);
    const HalfInt xs[] = {HalfInt::from_twice(3), HalfInt(2), HalfInt::from_twice(5), HalfInt(3)};
    for (int i = 0; i < 600; ++i) {
        ABFamily fam = gen::random_family(g, xs[i % 4]);
        std::ostringstream what;
        what << "a=" << fam.a << " b=" << fam.b << " x=" << fam.x.str() << " " << print_tempered(fam.tempered);
        t.guard(what.str(), [&fam] { return xgt1_order_via_recursion(fam) == cor_ab(fam).order; });
    }
    return t;
}

Tally socle_round_trip() {
    Tally t;
    // chain steps of the fixtures
    for (const char* text : {big, "pi(one:1:+,one:3:+,one:5:+)", "pi(one:1:-,one:3:-,one:5:+)",
                             "L(D(one,0,-2); pi(one:1:+,one:1:+,one:3:+))"}) {
        ClassicalRep cur = parse_rep(text);
        for (const auto& e : rho_data(cur, Sign::plus, one()).entries) {
            DerivativeResult d = highest_derivative(cur, one(), e.x);
            if (e.x != HalfInt(0))
                t.guard(std::string(text) + " at " + e.x.str(),
                        [&] { return socle_of_rho_power(d.rep, one(), e.x, d.order) == cur; });
            cur = d.rep;
        }
    }
    std::mt19937 g(1002);
    int reps = 0;
    while (reps < 400) {
        ClassicalRep rep = gen::random_rep(g);
        if (cuspidal_support(rep).size() > 8) continue;
        ++reps;
        for (const auto& rho : support_labels(rep)) {
            for (HalfInt x : exponents_of(rep, rho)) {
                if (x == HalfInt(0) && rho.self_dual()) continue;
                t.guard(print_document(rep) + " at " + rho.name + "|.|^" + x.str(), [&] {
                    DerivativeResult d = highest_derivative(rep, rho, x);
                    return socle_of_rho_power(d.rep, rho, x, d.order) == rep;
                });
            }
        }
    }
    return t;
}

Tally normal_form_suite() {
    Tally t;
    std::mt19937 g(1003);
    for (int i = 0; i < 400; ++i) {
        ClassicalRep rep = gen::random_rep(g);
        const std::string doc = print_document(rep);
        for (const auto& rho : support_labels(rep))
            t.guard(doc + " normal form at " + rho.name, [&] {
                normal_form(rho_data(rep, Sign::minus, rho));
                return true;
            });
        t.guard(doc + " temperedness", [&] { return is_tempered_by_data(rep) == rep.is_tempered(); });
    }
    for (int i = 0; i < 300; ++i) {
        Group group = gen::uniform(g, 0, 1) ? Group::B : Group::C;
        ClassicalRep rep = tempered_rep(gen::random_tempered(g, group, gen::uniform(g, 0, 6), gen::uniform(g, 0, 2)));
        t.guard(print_document(rep) + " tempered", [&] { return !validate(rep) && is_tempered_by_data(rep); });
    }
    return t;
}

Tally ladder_equivalence() {
    Tally t;
    std::mt19937 g(1004);
    for (int i = 0; i < 250; ++i) {
        GLData ladder = gen::random_ladder(g);
        std::vector<HalfInt> zs;
        for (const auto& s : ladder)
            for (HalfInt z = s.x; z >= s.y; z -= 1)
                if (std::find(zs.begin(), zs.end(), z) == zs.end()) zs.push_back(z);
        for (HalfInt z : zs) {
            t.guard("ladder at " + z.str(), [&] {
                int k = 0;
                GLData cur = ladder;
                for (bool found = true; found;) {
                    found = false;
                    for (const auto& term : ladder_jacquet_left(cur, one())) {
                        if (term.exponent != z) continue;
                        cur = term.rest;
                        found = true;
                        ++k;
                        break;
                    }
                }
                return k == gl_left_highest(ladder, one(), z).order;
            });
        }
    }
    return t;
}

Tally involution() {
    Tally t;
    auto check_one = [&t](const ClassicalRep& rep) {
        t.guard(print_document(rep), [&] {
            DualResult d = aubert_dual(rep);
            if (!d.resolved) return true;
            auto back = aubert_dual(d.candidates[0]).candidates;
            return std::find(back.begin(), back.end(), rep) != back.end();
        });
    };
    for (const char* text : {big, "pi(one:1:+,one:3:+,one:5:+)", "pi(one:1:-,one:3:-,one:5:+)", "pi(one:1:+)"})
        check_one(parse_rep(text));
    std::mt19937 g(1005);
    for (int i = 0; i < 150; ++i) check_one(gen::random_rep(g, 6));
    return t;
}

Tally kprime_boundaries() {
    Tally t;
    std::mt19937 g(1006);
    const HalfInt xs[] = {half, HalfInt(1), HalfInt::from_twice(3), HalfInt(2), HalfInt::from_twice(5), HalfInt(3)};
    for (int i = 0; i < 600; ++i) {
        ABFamily fam = gen::random_family(g, xs[i % 6]);
        t.guard("family " + print_tempered(fam.tempered), [&] {
            FamilyDerivative top = cor_ab(fam);
            return cor_kprime(fam, 0) == top.family && cor_kprime(fam, top.order) == fam;
        });
    }
    return t;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Tally (*run)();
    };
    const Criterion criteria[] = {
        {"rho-data regression", rho_data_regression},
        {"Aubert regressions", aubert_regressions},
        {"closed order formula vs x>1 recursion", oracle_agreement},
        {"socle/derivative round trip", socle_round_trip},
        {"normal form and temperedness", normal_form_suite},
        {"GL ladder oracle", ladder_equivalence},
        {"Aubert involution", involution},
        {"k' boundaries", kprime_boundaries},
    };
    int failed = 0;
    int n = 0;
    for (const auto& c : criteria) {
        Tally t = c.run();
        bool ok = t.failures == 0 && t.cases > 0;
        failed += !ok;
        std::cout << "criterion " << ++n << " " << (ok ? "PASS" : "FAIL") << ": " << c.name << " ("
                  << t.cases - t.failures << "/" << t.cases << ")\n";
        for (const auto& note : t.notes) std::cout << "    " << note << "\n";
    }
    return failed == 0 ? 0 : 1;
}
