#include "gen.hpp"
#include "hdual/aubert.hpp"
#include "hdual/glrep.hpp"
#include "hdual/jantzen.hpp"
#include "hdual/notation.hpp"

#include <doctest.h>

#include <set>

using namespace hdual;

namespace {

const CuspLabel& one() { return trivial_label(); }

struct Step {
    HalfInt x;
    int k;
    const char* after;
};

// The plus-chain of pi(1+,3-,5+,5+,5+,5+,7-) one step at a time.
const char* const big = "pi(one:1:+,one:3:-,one:5:+,one:5:+,one:5:+,one:5:+,one:7:-)";
const std::vector<Step> big_chain = {
    {2, 3, "L(D(one,1,-2); pi(one:1:+,one:3:-,one:3:-,one:3:-,one:7:-))"},
    {3, 1, "L(D(one,1,-2); pi(one:1:+,one:3:-,one:3:-,one:3:-,one:5:-))"},
    {1, 3, "L(D(one,0,-2); pi(one:1:+,one:1:+,one:1:+,one:3:-,one:5:-))"},
    {2, 1, "L(D(one,0,-2); pi(one:1:+,one:1:+,one:1:+,one:3:-,one:3:-))"},
    {0, 2, "L(D(one,-1,-2); pi(one:1:+,one:3:-,one:3:-))"},
    {1, 1, "L(D(one,-1,-2),D(one,0,-1); pi(one:1:+))"},
    {-1, 1, "L(D(one,-2,-2),D(one,0,-1); pi(one:1:+))"},
    {0, 1, "L(D(one,-2,-2),D(one,-1,-1); pi(one:1:+))"},
    {-2, 1, "L(D(one,-1,-1); pi(one:1:+))"},
    {-1, 1, "pi(one:1:+)"},
};

std::set<HalfInt> exponents_of(const ClassicalRep& rep, const CuspLabel& rho) {
    std::set<HalfInt> out;
    for (const auto& p : cuspidal_support(rep))
        if (p.rho == rho) out.insert(p.z);
    return out;
}

}  // namespace

TEST_CASE("worked chain, one derivative at a time") {
    ClassicalRep cur = parse_rep(big);
    for (const auto& step : big_chain) {
        CAPTURE(step.after);
        auto d = highest_derivative(cur, one(), step.x);
        CHECK(d.order == step.k);
        ClassicalRep expected = parse_rep(step.after);
        CHECK(d.rep == expected);
        CHECK(highest_derivative(d.rep, one(), step.x).order == 0);
        if (step.x != HalfInt(0)) CHECK(socle_of_rho_power(d.rep, one(), step.x, d.order) == cur);
        cur = expected;
    }
}

TEST_CASE("the two non-trivial steps") {
    auto d = highest_derivative(parse_rep("L(D(one,0,-2); pi(one:1:+,one:1:+,one:1:+,one:3:-,one:5:-))"), one(), 2);
    CHECK(d.order == 1);
    CHECK(d.rep == parse_rep("L(D(one,0,-2); pi(one:1:+,one:1:+,one:1:+,one:3:-,one:3:-))"));
    CHECK(highest_derivative(parse_rep("L(D(one,-1,-2),D(one,0,-1); pi(one:1:+))"), one(), 2).order == 0);
    d = highest_derivative(parse_rep("L(D(one,0,-2); pi(one:1:+,one:1:+,one:1:+,one:3:-,one:3:-))"), one(), 0);
    CHECK(d.order == 2);
    CHECK(d.rep == parse_rep("L(D(one,-1,-2); pi(one:1:+,one:3:-,one:3:-))"));
}

TEST_CASE("derivatives at zero see segments starting at -1") {
    // two copies of rho|.|^0 from the tempered part are absorbed by the two |.|^-1
    auto d = highest_derivative(parse_rep("L(D(one,-2,-2),D(one,-1,-1),D(one,-1,-1); pi(one:1:+,one:1:+,one:1:+))"),
                                one(), 0);
    CHECK(d.order == 0);
    // one |.|^-1 is not enough against three copies
    d = highest_derivative(parse_rep("L(D(one,-2,-2),D(one,-1,-1); pi(one:1:+,one:1:+,one:1:+))"), one(), 0);
    CHECK(d.order == 1);
    CHECK(d.rep == parse_rep("L(D(one,-2,-2),D(one,-1,-1); pi(one:1:+))"));
    d = highest_derivative(parse_rep("L(D(one,-1,-1); pi(one:1:+,one:1:+,one:1:+))"), one(), 0);
    CHECK(d.order == 1);
    CHECK(d.rep == parse_rep("L(D(one,-1,-1); pi(one:1:+))"));
    // but it is against two
    CHECK(highest_derivative(parse_rep("L(D(one,-2,-2),D(one,-1,-1); pi(one:1:-,one:1:-,one:3:+))"), one(), 0).order ==
          0);
}

TEST_CASE("the order at zero is the same for a representation and its dual") {
    std::mt19937 g(59);
    for (int trial = 0; trial < 150; ++trial) {
        ClassicalRep rep = gen::random_rep(g, 6);
        DualResult d = aubert_dual(rep);
        if (!d.resolved) continue;
        CAPTURE(print_document(rep));
        for (const auto& rho : support_labels(rep))
            if (rho.self_dual())
                CHECK(highest_derivative(rep, rho, 0).order == highest_derivative(d.candidates[0], rho, 0).order);
    }
}

TEST_CASE("socle edge cases") {
    ClassicalRep rep = parse_rep("pi(one:1:+)");
    CHECK(socle_of_rho_power(rep, one(), 1, 0) == rep);
    try {
        socle_of_rho_power(rep, one(), 0, 1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ambiguous_at_zero);
    }
    CHECK(socle_of_rho_power(rep, one(), -1, 2) == parse_rep("L(D(one,-1,-1),D(one,-1,-1); pi(one:1:+))"));
    CHECK(socle_of_rho_power(rep, one(), 1, 1) == parse_rep("pi(one:3:+)"));
}

TEST_CASE("negative exponents only see the GL part") {
    std::mt19937 g(53);
    for (int trial = 0; trial < 200; ++trial) {
        ClassicalRep rep = gen::random_rep(g);
        for (const auto& rho : support_labels(rep)) {
            if (!rho.self_dual()) continue;
            for (HalfInt x : exponents_of(rep, rho)) {
                if (!(x < HalfInt(0))) continue;
                auto d = highest_derivative(rep, rho, x);
                auto gl = gl_left_highest(rep.gl, rho, x);
                CHECK(d.order == gl.order);
                CHECK(d.rep.tempered == rep.tempered);
            }
        }
    }
}

TEST_CASE("highest derivatives on random representations") {
    std::mt19937 g(59);
    int round_trips = 0;
    for (int trial = 0; trial < 300; ++trial) {
        ClassicalRep rep = gen::random_rep(g);
        CAPTURE(print_document(rep));
        for (const auto& rho : support_labels(rep)) {
            for (HalfInt x : exponents_of(rep, rho)) {
                CAPTURE(rho.name);
                CAPTURE(x.str());
                auto d = highest_derivative(rep, rho, x);
                CHECK(d.order >= 0);
                CHECK_FALSE(validate(d.rep).has_value());
                for (const auto& s : d.rep.gl) CHECK(s.center2() < HalfInt(0));
                CHECK(highest_derivative(d.rep, rho, x).order == 0);
                if (d.order > 0 && (x != HalfInt(0) || !rho.self_dual())) {
                    CHECK(socle_of_rho_power(d.rep, rho, x, d.order) == rep);
                    ++round_trips;
                }
            }
        }
    }
    CHECK(round_trips > 100);
}

TEST_CASE("bad lines outside the doubled model are reported") {
    // Delta[-1/2,-3/2] is linked with its dual, so the doubled model loses its symmetry
    ClassicalRep rep = parse_rep("L(D(one,-1/2,-3/2); pi(one:3:+,one:3:+,one:3:+,one:2:pair))");
    try {
        highest_derivative(rep, one(), half);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition_failed);
    }
    // pairs alone stay inside it; rho|.|^{-1/2} x pi is irreducible, so both exponents come off
    auto d = highest_derivative(parse_rep("pi(one:3:+,one:3:+,one:3:+,one:2:pair)"), one(), half);
    CHECK(d.order == 2);
    CHECK(d.rep == parse_rep("pi(one:3:+,one:3:+,one:3:+)"));
}
