#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "algame/errors.hpp"
#include "algame/finite_ring.hpp"
#include "algame/numtheory.hpp"

using namespace algame;

namespace {

std::shared_ptr<const FiniteCommRing> shared(FiniteCommRing r) {
    return std::make_shared<const FiniteCommRing>(std::move(r));
}

} // namespace

TEST_CASE("constructors and sizes") {
    CHECK(z_mod(4).size() == 4);
    CHECK_FALSE(is_field(z_mod(4)));
    CHECK(is_field(gf_p(5)));
    CHECK(square_zero_extension(2, 2).size() == 8);
    CHECK(dual_truncated(2, 1).size() == 2);
    CHECK(is_field(dual_truncated(2, 1)));
    CHECK(dual_truncated(2, 3).size() == 32);
    CHECK(cusp_truncation(2, 0).size() == 2);
    CHECK(cusp_truncation(2, 3).size() == 128);
    CHECK(monomial_ring(2, 2, 2).size() == 8);
    CHECK(monomial_ring(3, 3, 3).size() == 243);
    CHECK(product(gf_p(2), gf_p(3)).size() == 6);
    CHECK(z_mod(1).size() == 1);
    CHECK_THROWS_AS(gf_p(6), std::invalid_argument);
    CHECK_THROWS_AS(z_mod(4096), resource_limit_error);
    CHECK_THROWS_AS(cusp_truncation(2, 5), resource_limit_error); // size 2048
}

TEST_CASE("structure constant validation") {
    // A non-commutative product e1*e2 != e2*e1 must be rejected.
    CHECK_THROWS_AS(FiniteCommRing::from_structure_constants(
                        {2, 2}, {1, 0}, {{{1, 0}, {0, 1}}, {{0, 0}, {0, 1}}}),
                    std::invalid_argument);
    // Ill-defined bilinearity: 2 * (e0*e0) != 0 with k_0 = 2 over Z/4 part.
    CHECK_THROWS_AS(FiniteCommRing::from_structure_constants({2, 4}, {1, 0},
                                                             {{{0, 1}, {0, 0}}, {{0, 0}, {0, 0}}}),
                    std::invalid_argument);
}

TEST_CASE("exhaustive validation on the catalogue") {
    CHECK(z_mod(12).validate_exhaustive());
    CHECK(square_zero_extension(3, 2).validate_exhaustive());
    CHECK(cusp_truncation(2, 2).validate_exhaustive());
    CHECK(dual_truncated(3, 2).validate_exhaustive());
    CHECK(monomial_ring(2, 3, 2).validate_exhaustive());
    CHECK(product(z_mod(4), gf_p(3)).validate_exhaustive());
}

TEST_CASE("principal ideals and extensions") {
    FiniteCommRing z6 = z_mod(6);
    CHECK(principal_ideal(z6, 0).elements() == std::vector<int>{0});
    CHECK(principal_ideal(z6, 1).size() == 6);
    CHECK(principal_ideal(z6, 2).elements() == std::vector<int>{0, 2, 4});

    FiniteCommRing z4 = z_mod(4);
    Ideal i = ideal_extend(z4, Ideal(), 2);
    CHECK(i.elements() == std::vector<int>{0, 2});
    CHECK(ideal_extend(z4, Ideal(), 1).size() == 4);
    CHECK_THROWS_AS(ideal_extend(z4, i, 2), std::invalid_argument);

    FiniteCommRing ff = product(gf_p(2), gf_p(2));
    int e10 = ff.id_of({1, 0});
    Ideal j = ideal_extend(ff, Ideal(), e10);
    CHECK(j.size() == 2);
    CHECK(is_ideal(ff, j));

    // Ideal axioms hold for every one-step extension in a sample ring.
    FiniteCommRing r = square_zero_extension(2, 2);
    for (int a = 1; a < r.size(); ++a) {
        CHECK(is_ideal(r, principal_ideal(r, a)));
        CHECK(is_ideal(r, ideal_extend(r, Ideal(), a)));
    }
}

TEST_CASE("GF(4) via raw structure constants") {
    // F_2[x]/(x^2 + x + 1): e1 * e1 = 1 + x.
    FiniteCommRing f4 = FiniteCommRing::from_structure_constants(
        {2, 2}, {1, 0}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}});
    CHECK(f4.size() == 4);
    CHECK(is_field(f4));
    CHECK(f4.validate_exhaustive());
    Solver solver;
    CHECK(ring_game_outcome(shared(f4), solver).misere == NP::P);
    CHECK(ring_nimber(shared(f4), solver) == Ordinal::finite(1));
}

TEST_CASE("idempotents and fields") {
    CHECK(has_nontrivial_idempotent(product(gf_p(2), gf_p(2))));
    CHECK_FALSE(has_nontrivial_idempotent(gf_p(5)));
    CHECK_FALSE(has_nontrivial_idempotent(z_mod(4)));
    CHECK(has_nontrivial_idempotent(z_mod(6))); // 3*3 = 3 and 4*4 = 4
    CHECK_FALSE(is_field(z_mod(1)));
}

TEST_CASE("ring game outcomes") {
    Solver solver;
    for (std::int64_t p : {2, 3, 5})
        CHECK(ring_game_outcome(shared(gf_p(p)), solver).misere == NP::P);
    CHECK(ring_game_outcome(shared(z_mod(4)), solver).misere == NP::N);
    CHECK(ring_game_outcome(shared(square_zero_extension(2, 2)), solver).misere == NP::P);
    // Any non-trivial ring is a normal-play first player win via a = 1.
    CHECK(ring_game_outcome(shared(z_mod(30)), solver).normal == NP::N);
    CHECK(ring_game_outcome(shared(z_mod(1)), solver).normal == NP::P);
    CHECK(ring_game_outcome(shared(z_mod(1)), solver).misere == NP::N);
    CHECK_THROWS_AS(ring_game_outcome(shared(z_mod(8)), solver, /*max_size=*/4),
                    resource_limit_error);
}

TEST_CASE("ring nimbers") {
    Solver solver;
    CHECK(ring_nimber(shared(z_mod(1)), solver) == Ordinal());
    CHECK(ring_nimber(shared(gf_p(7)), solver) == Ordinal::finite(1));
    CHECK(ring_nimber(shared(product(gf_p(2), gf_p(2))), solver) == Ordinal::finite(2));
    CHECK(ring_nimber(shared(product(square_zero_extension(2, 2), gf_p(2))), solver) ==
          Ordinal::finite(4));
    for (std::int64_t m : {2, 6, 8, 30, 36})
        CHECK(ring_nimber(shared(z_mod(m)), solver) == Ordinal::finite(nt::omega(m)));
}

TEST_CASE("misere P equivalences at small sizes") {
    Solver solver;
    std::vector<std::shared_ptr<const FiniteCommRing>> rings{
        shared(gf_p(2)),
        shared(gf_p(3)),
        shared(z_mod(4)),
        shared(z_mod(12)),
        shared(square_zero_extension(2, 1)),
        shared(square_zero_extension(2, 2)),
        shared(product(gf_p(2), gf_p(3))),
        shared(dual_truncated(2, 2)),
        shared(monomial_ring(2, 2, 3)),
    };
    for (const auto& r : rings) {
        Outcome o = ring_game_outcome(r, solver);
        Ordinal nim = ring_nimber(r, solver);
        CHECK((o.misere == NP::P) == (nim == Ordinal::finite(1)));
        if (o.misere == NP::P) CHECK_FALSE(has_nontrivial_idempotent(*r));
        if (r->size() > 1) CHECK(o.normal == NP::N);
    }
}

TEST_CASE("product game equals the selective compound") {
    Solver solver;
    std::vector<std::shared_ptr<const FiniteCommRing>> factors{
        shared(gf_p(2)), shared(z_mod(4)), shared(square_zero_extension(2, 1)), shared(gf_p(3))};
    for (const auto& a : factors)
        for (const auto& b : factors) {
            Ordinal direct = ring_nimber(shared(product(*a, *b)), solver);
            Ordinal via_compound = solver.nimber(compound({ring_game_start(a), ring_game_start(b)}));
            CHECK(direct == via_compound);
        }
}
