#include "gen.hpp"
#include "hdual/notation.hpp"
#include "hdual/rhodata.hpp"
#include "hdual/tempered.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hdual;

namespace {

const CuspLabel& one() { return trivial_label(); }
TemperedParam temp(const std::string& text) { return parse_rep(text).tempered; }

bool contains(const std::vector<TemperedParam>& v, const TemperedParam& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

TEST_CASE("tempered highest derivative on the worked chains") {
    auto d = tempered_highest_derivative(temp("pi(one:1:+,one:3:-,one:5:+,one:5:+,one:5:+,one:5:+,one:7:-)"), one(), 2);
    CHECK(d.order == 3);
    CHECK(d.multiplicity == 1);
    CHECK(d.rep == parse_rep("L(D(one,1,-2); pi(one:1:+,one:3:-,one:3:-,one:3:-,one:7:-))"));

    d = tempered_highest_derivative(temp("pi(one:1:+,one:1:+,one:1:+)"), one(), 0);
    CHECK(d.order == 1);
    CHECK(d.multiplicity == 2);
    CHECK(d.rep == parse_rep("pi(one:1:+)"));

    d = tempered_highest_derivative(temp("pi(one:1:+)"), one(), 1);
    CHECK(d.order == 0);
    CHECK(d.rep == parse_rep("pi(one:1:+)"));

    // odd multiplicity with a sign clash stays tempered
    d = tempered_highest_derivative(temp("pi(one:1:+,one:3:-,one:3:-,one:3:-,one:5:-)"), one(), 1);
    CHECK(d.order == 2);
    CHECK(d.rep == parse_rep("pi(one:1:+,one:1:+,one:1:+,one:3:-,one:5:-)"));

    CHECK(tempered_highest_derivative(temp("pi(one:1:+,one:3:+,one:5:+)"), one(), -1).order == 0);
}

TEST_CASE("multiplicity at zero") {
    // m even, same type: 2^(k-1)
    auto d = tempered_highest_derivative(temp("pi(one:1:+,one:1:+,one:3:+)"), one(), 0);
    CHECK(d.order == 1);
    CHECK(d.multiplicity == 1);
    // opposite type: pairs at a = 1
    TemperedParam phi(Group::C);
    phi.add(one(), 1, Sign::plus);
    phi.add_pair(gen::symp(), 1, 2);
    d = tempered_highest_derivative(phi, gen::symp(), 0);
    CHECK(d.order == 2);
    CHECK(d.multiplicity == 4);
    CHECK(d.rep == parse_rep("pi(one:1:+)"));
}

TEST_CASE("ml_reconstruct single steps") {
    CHECK(ml_reconstruct(1, 1, temp("pi(one:1:+)"), one()) == std::vector<TemperedParam>{temp("pi(one:3:+)")});
    // an existing isotype fixes the sign of the new copies
    CHECK(ml_reconstruct(0, 1, temp("pi(one:1:+)"), one()) ==
          std::vector<TemperedParam>{temp("pi(one:1:+,one:1:+,one:1:+)")});
    auto two = ml_reconstruct(0, 1, temp("pi(one:3:+)"), one());
    CHECK(two.size() == 2);
    CHECK(contains(two, temp("pi(one:1:+,one:1:+,one:3:+)")));
    CHECK(contains(two, temp("pi(one:1:-,one:1:-,one:3:+)")));

    auto r = ml_reconstruct(2, 1, temp("pi(one:1:+,one:3:-,one:3:-)"), one());
    REQUIRE(r.size() == 1);
    CHECK(r[0] == temp("pi(one:1:+,one:3:-,one:5:-)"));
    auto back = tempered_highest_derivative(r[0], one(), 2);
    CHECK(back.order == 1);
    CHECK(back.rep == parse_rep("pi(one:1:+,one:3:-,one:3:-)"));

    try {
        ml_reconstruct(2, 2, temp("pi(one:1:+,one:3:-,one:5:-)"), one());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ml_precondition_failed);
    }
}

TEST_CASE("tempered derivative properties on random parameters") {
    std::mt19937 g(29);
    for (int trial = 0; trial < 400; ++trial) {
        Group group = gen::uniform(g, 0, 1) ? Group::B : Group::C;
        TemperedParam phi = gen::random_tempered(g, group, gen::uniform(g, 1, 6), 0);
        for (const auto& e : phi.gp()) {
            HalfInt x = HalfInt::from_twice(e.a - 1);
            auto d = tempered_highest_derivative(phi, e.rho, x);
            int bound = x == HalfInt(0) ? e.count / 2 : e.count;
            CHECK(d.order <= bound);
            CHECK_FALSE(validate(d.rep).has_value());
            CHECK(tempered_highest_derivative(d.rep.tempered, e.rho, x).order == 0);
            if (x > HalfInt(0) && d.order > 0 && d.rep.is_tempered()) {
                auto up = ml_reconstruct(x, d.order, d.rep.tempered, e.rho);
                CHECK(contains(up, phi));
                for (const auto& c : up) {
                    auto again = tempered_highest_derivative(c, e.rho, x);
                    CHECK(again.order == d.order);
                    CHECK(again.rep.tempered == d.rep.tempered);
                }
            }
        }
    }
}

TEST_CASE("minus-data rebuilds the tempered parameter") {
    std::mt19937 g(31);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        TemperedParam phi(Group::C);
        for (int i = gen::uniform(g, 1, 6); i > 0; --i) phi.add(one(), 2 * gen::uniform(g, 0, 3) + 1, gen::coin(g));
        gen::fix_dimension(phi);
        gen::fix_sign_product(phi);
        RhoData d = rho_data(tempered_rep(phi), Sign::minus, one());
        REQUIRE(d.terminal.is_tempered());
        auto cands = ml_reconstruct_chain(d.entries, d.terminal.tempered, one());
        CHECK(contains(cands, phi));
        ++checked;
    }
    CHECK(checked == 300);
}

TEST_CASE("irreducibility criteria") {
    TemperedParam mixed = temp("pi(one:1:-,one:3:-,one:5:+)");
    CHECK(irr_rho_induction(mixed, one(), 5));
    CHECK(irr_rho_induction(temp("pi(one:1:+)"), one(), 5));
    CHECK_FALSE(irr_rho_induction(temp("pi(one:1:+,one:3:+,one:3:+)"), one(), 5));
    CHECK_FALSE(irr_rho_induction(temp("pi(one:1:+,one:3:+,one:5:+)"), one(), 5));
    CHECK_THROWS_AS(irr_rho_induction(mixed, one(), 4), Error);

    CHECK(irr_delta_induction(mixed, one(), 2, DeltaVariant::plain) == Irreducibility::irreducible);
    TemperedParam equal = temp("pi(one:1:+,one:3:+,one:5:+)");
    CHECK(irr_delta_induction(equal, one(), 2, DeltaVariant::plain) == Irreducibility::reducible);
    CHECK(irr_delta_induction(equal, one(), 2, DeltaVariant::with_delta01) == Irreducibility::irreducible);
    CHECK(irr_delta_induction(mixed, one(), 2, DeltaVariant::with_delta01) == Irreducibility::undetermined);

    TemperedParam ones = temp("pi(one:1:+,one:1:+,one:1:+)");
    CHECK(irr1(ones, one(), 3));
    CHECK_FALSE(irr1(ones, one(), 2));
    // delta_3 = 1 lowers the threshold
    TemperedParam clash = temp("pi(one:1:+,one:1:+,one:1:+,one:3:-,one:3:-)");
    CHECK(irr1(clash, one(), 2));
    CHECK_FALSE(irr1(clash, one(), 1));
}
