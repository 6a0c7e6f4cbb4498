#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "algame/abelian.hpp"
#include "algame/errors.hpp"
#include "algame/numtheory.hpp"
#include "algame/verify.hpp"

using namespace algame;

namespace {

// Independent isomorphism oracle for finite abelian groups: the multiset of
// element orders determines the isomorphism class.
std::map<std::int64_t, int> order_multiset(const std::vector<std::int64_t>& orders) {
    std::map<std::int64_t, int> counts;
    std::vector<std::int64_t> mods;
    for (std::int64_t d : orders)
        if (d > 1) mods.push_back(d);
    std::vector<std::int64_t> x(mods.size(), 0);
    for (;;) {
        std::int64_t ord = 1;
        for (std::size_t i = 0; i < mods.size(); ++i)
            ord = std::lcm(ord, mods[i] / std::gcd(mods[i], x[i]));
        ++counts[ord];
        std::size_t i = mods.size();
        while (i > 0 && ++x[i - 1] == mods[i - 1]) x[--i] = 0;
        if (i == 0) break;
    }
    return counts;
}

FinGenAbGroup grp(std::vector<std::int64_t> orders) { return canonicalize(orders); }

} // namespace

TEST_CASE("number theory helpers") {
    CHECK(nt::omega(1) == 0);
    CHECK(nt::omega(12) == 3);
    CHECK(nt::omega(97) == 1);
    CHECK(nt::valuation(48, 2) == 4);
    CHECK(nt::valuation(48, 3) == 1);
    CHECK(nt::triangular(0) == 0);
    CHECK(nt::triangular(4) == 10);
    CHECK(nt::divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(nt::is_prime(2));
    CHECK_FALSE(nt::is_prime(1));
    CHECK_FALSE(nt::is_prime(91));
    CHECK(grp({4, 12}).torsion_length() == 5);
}

TEST_CASE("canonicalize") {
    CHECK(grp({6, 4}) == FinGenAbGroup({2, 12}, 0));
    CHECK(order_multiset({6, 4}) == order_multiset({2, 12})); // isomorphism oracle
    CHECK(grp({1, 5}) == FinGenAbGroup({5}, 0));
    CHECK(grp({0, 0}) == FinGenAbGroup({}, 2));
    CHECK(grp({}) == FinGenAbGroup());
    CHECK(grp({2, 3}) == FinGenAbGroup({6}, 0));
    CHECK(grp({4, 6, 4}) == FinGenAbGroup({2, 4, 12}, 0));
    CHECK(order_multiset({4, 6, 4}) == order_multiset({2, 4, 12}));
    CHECK_THROWS_AS(FinGenAbGroup({4, 6}, 0), std::invalid_argument); // not a divisor chain
    CHECK_THROWS_AS(FinGenAbGroup({1, 2}, 0), std::invalid_argument);
}

TEST_CASE("options") {
    auto opts = options(grp({4, 4}));
    CHECK(opts == std::vector<FinGenAbGroup>{grp({2, 4}), grp({4})});
    CHECK(options(FinGenAbGroup()).empty());
    CHECK(options(grp({5})) == std::vector<FinGenAbGroup>{FinGenAbGroup()});
    CHECK_THROWS_AS(options(FinGenAbGroup({}, 1)), unsupported_error);
}

TEST_CASE("quotients by explicit elements") {
    // (Z + Z)/<(2,2)> = Z/2 + Z
    AbElement x;
    x.free_coords = {2, 2};
    CHECK(quotient_by_element(FinGenAbGroup({}, 2), x) == FinGenAbGroup({2}, 1));

    AbElement y;
    y.residues = {0, 4};
    CHECK(quotient_by_element(grp({4, 8}), y) == grp({4, 4}));

    AbElement z;
    z.residues = {1, 2, 2};
    CHECK(quotient_by_element(grp({4, 8, 40}), z) == grp({8, 8}));

    AbElement zero;
    zero.residues = {0, 0};
    CHECK_THROWS_AS(quotient_by_element(grp({4, 8}), zero), std::invalid_argument);

    // Negative coordinates are fine; (Z + Z)/<(-2, 2)> = Z/2 + Z as well.
    AbElement neg;
    neg.free_coords = {-2, 2};
    CHECK(quotient_by_element(FinGenAbGroup({}, 2), neg) == FinGenAbGroup({2}, 1));
    AbElement negres;
    negres.residues = {-1, 2, 2}; // reduces to 3,2,2 in Z/4 + Z/8 + Z/40
    CHECK(quotient_by_element(grp({4, 8, 40}), negres) ==
          quotient_by_element(grp({4, 8, 40}), reduce_element(grp({4, 8, 40}), negres)));

    // Order bookkeeping: |A| = |A/<x>| * ord(x).
    FinGenAbGroup a = grp({4, 8});
    for (const AbElement& e : all_elements(a)) {
        if (e.is_zero()) continue;
        CHECK(a.order() == quotient_by_element(a, e).order() * element_order(a, e));
    }
}

TEST_CASE("squares and elementary abelian groups") {
    CHECK(is_square(grp({2, 2})));
    CHECK(is_square(FinGenAbGroup({}, 2)));
    CHECK_FALSE(is_square(grp({4, 8})));
    CHECK(is_square(FinGenAbGroup()));
    CHECK_FALSE(is_square(grp({2, 2, 2})));
    CHECK(is_square(grp({3, 3, 6, 6})));

    CHECK(is_elementary_abelian(grp({2, 2})));
    CHECK(is_elementary_abelian(FinGenAbGroup()));
    CHECK_FALSE(is_elementary_abelian(grp({4})));
    CHECK_FALSE(is_elementary_abelian(grp({2, 4})));
    CHECK_FALSE(is_elementary_abelian(FinGenAbGroup({2}, 1)));
}

TEST_CASE("outcome classifier") {
    Outcome p3 = outcome_classifier(grp({3, 3, 3}));
    CHECK(p3.normal == NP::N);
    CHECK(p3.misere == NP::P);

    Outcome p2 = outcome_classifier(grp({5, 5}));
    CHECK(p2.normal == NP::P);
    CHECK(p2.misere == NP::N);

    Outcome zz = outcome_classifier(FinGenAbGroup({}, 2));
    CHECK(zz.normal == NP::P);
    CHECK(zz.misere == NP::P);

    Outcome trivial = outcome_classifier(FinGenAbGroup());
    CHECK(trivial.normal == NP::P);
    CHECK(trivial.misere == NP::N);
}

TEST_CASE("winning moves from the worked examples") {
    AbElement m1 = winning_move(grp({4, 8, 40}), Rule::Normal);
    CHECK(m1.residues == std::vector<std::int64_t>{1, 2, 2});

    AbElement m2 = winning_move(grp({4, 8}), Rule::Normal);
    CHECK(m2.residues == std::vector<std::int64_t>{0, 4});

    AbElement m3 = winning_move(grp({5}), Rule::Normal);
    CHECK(m3.residues == std::vector<std::int64_t>{1});

    CHECK_THROWS_AS(winning_move(grp({2, 2}), Rule::Normal), std::invalid_argument);
    CHECK_THROWS_AS(winning_move(FinGenAbGroup(), Rule::Normal), std::invalid_argument);
    CHECK_THROWS_AS(winning_move(grp({3, 3, 3}), Rule::Misere), std::invalid_argument);

    // Misere exceptions around elementary abelian groups.
    AbElement m4 = winning_move(grp({2, 2}), Rule::Misere);
    CHECK(quotient_by_element(grp({2, 2}), m4) == grp({2}));
    AbElement m5 = winning_move(grp({4}), Rule::Misere);
    CHECK(quotient_by_element(grp({4}), m5) == grp({2}));
    AbElement m6 = winning_move(grp({12}), Rule::Misere);
    CHECK(outcome_classifier(quotient_by_element(grp({12}), m6)).misere == NP::P);
    AbElement m7 = winning_move(grp({2, 6}), Rule::Misere);
    CHECK(outcome_classifier(quotient_by_element(grp({2, 6}), m7)).misere == NP::P);

    // Infinite cases: Z, (Z/p)^s + Z, Z/n + Z.
    for (Rule rule : {Rule::Normal, Rule::Misere}) {
        AbElement mz = winning_move(FinGenAbGroup({}, 1), rule);
        CHECK(outcome_classifier(quotient_by_element(FinGenAbGroup({}, 1), mz)).under(rule) == NP::P);
    }
    FinGenAbGroup p2z({2, 2}, 1);
    AbElement m8 = winning_move(p2z, Rule::Misere);
    CHECK(outcome_classifier(quotient_by_element(p2z, m8)).misere == NP::P);
}

TEST_CASE("nimber computations") {
    Solver solver;
    CHECK(nimber_bruteforce(FinGenAbGroup(), solver) == Ordinal());
    CHECK(nimber_bruteforce(grp({12}), solver) == Ordinal::finite(3));
    CHECK(nimber_bruteforce(grp({6, 12}), solver) == Ordinal::finite(1));
    CHECK(nimber_bruteforce(grp({16, 256}), solver) == Ordinal::finite(12)); // p^4, p^8
}

TEST_CASE("two-generator closed form") {
    CHECK(nimber_2gen_formula(4, 8) == 12);
    CHECK(nimber_2gen_formula(6, 8) == 5);
    for (int m = 0; m <= 14; ++m) CHECK(nimber_2gen_formula(0, m) == m);
    CHECK_THROWS_AS(nimber_2gen_formula(3, 2), std::invalid_argument);
}

TEST_CASE("omega reduction") {
    CHECK(omega_reduce(grp({6, 12})) == grp({4, 8}));
    CHECK(omega_reduce(grp({2, 4})) == grp({2, 4}));
    CHECK(omega_reduce(grp({5})) == grp({2}));
    CHECK(omega_reduce(grp({5}), 3) == grp({3}));
    CHECK_THROWS_AS(omega_reduce(FinGenAbGroup({}, 1)), unsupported_error);
}

TEST_CASE("nimber formula families") {
    CHECK(nimber_formula(FinGenAbGroup({}, 1)) == Ordinal::omega());
    CHECK(nimber_formula(FinGenAbGroup({4}, 1)) == Ordinal(1, 2));
    CHECK(nimber_formula(grp({6, 12})) == Ordinal::finite(1));
    CHECK(nimber_formula(FinGenAbGroup()) == Ordinal());
    CHECK_THROWS_AS(nimber_formula(grp({2, 2, 2})), unsupported_error);
    CHECK_THROWS_AS(nimber_formula(FinGenAbGroup({}, 2)), unsupported_error);
}

TEST_CASE("three-generator conjecture evaluation") {
    ConjecturedNimber c1 = conjectured_nimber_3gen(1, 2, 2);
    CHECK(c1.value == 2);
    CHECK_FALSE(c1.trusted);

    ConjecturedNimber c2 = conjectured_nimber_3gen(1, 8, 8);
    CHECK(c2.value == 1);
    CHECK(c2.trusted);

    // With n1 = 0 the formula degenerates to the two-generator one.
    for (int n = 0; n <= 10; ++n)
        for (int m = n; m <= 10; ++m)
            CHECK(conjectured_nimber_3gen(0, n, m).value == nimber_2gen_formula(n, m));

    CHECK_THROWS_AS(conjectured_nimber_3gen(2, 1, 3), std::invalid_argument);
}

TEST_CASE("option soundness both ways up to order 256") {
    CHECK(verify::option_characterization(256).all_pass());
}

TEST_CASE("classifier matches brute force up to order 64") {
    Solver solver;
    for (const FinGenAbGroup& a : verify::all_finite_abelian(64))
        CHECK(outcome_bruteforce(a, solver) == outcome_classifier(a));
}

TEST_CASE("winning move postcondition sampled") {
    for (const FinGenAbGroup& a : verify::all_finite_abelian(64)) {
        for (Rule rule : {Rule::Normal, Rule::Misere}) {
            if (a.is_trivial() || outcome_classifier(a).under(rule) != NP::N) continue;
            FinGenAbGroup q = quotient_by_element(a, winning_move(a, rule));
            CHECK(outcome_classifier(q).under(rule) == NP::P);
        }
    }
}

TEST_CASE("multiplicativity for coprime parts") {
    Solver solver;
    auto groups = verify::all_finite_abelian(64);
    for (const FinGenAbGroup& a : groups) {
        if (a.order() < 2) continue;
        for (const FinGenAbGroup& b : groups) {
            if (b.order() < 2 || std::gcd(a.order(), b.order()) != 1) continue;
            Outcome direct = outcome_bruteforce(direct_sum(a, b), solver);
            Outcome oa = outcome_bruteforce(a, solver), ob = outcome_bruteforce(b, solver);
            CHECK(direct.normal == compound_normal_outcome({oa, ob}));
            CHECK(direct.misere ==
                  compound_misere_outcome({{a.is_trivial(), oa}, {b.is_trivial(), ob}}));
        }
    }
}

TEST_CASE("nimber bounded by the torsion length at small orders") {
    Solver solver;
    for (const FinGenAbGroup& a : verify::all_finite_abelian(64)) {
        Ordinal nim = nimber_bruteforce(a, solver);
        CHECK(nim <= Ordinal::finite(a.torsion_length()));
    }
}
