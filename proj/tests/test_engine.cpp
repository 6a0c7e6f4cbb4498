#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "algame/abelian.hpp"
#include "algame/engine.hpp"
#include "algame/errors.hpp"
#include "algame/verify.hpp"

using namespace algame;

namespace {

std::shared_ptr<const NimPile> star(std::uint64_t k) { return std::make_shared<NimPile>(k); }

} // namespace

TEST_CASE("terminal positions") {
    Solver solver;
    Outcome o = solver.outcome(star(0));
    CHECK(o.normal == NP::P);
    CHECK(o.misere == NP::N);
    CHECK(solver.nimber(star(0)) == Ordinal());
}

TEST_CASE("nim piles have their size as nimber") {
    Solver solver;
    for (std::uint64_t k = 0; k <= 6; ++k) CHECK(solver.nimber(star(k)) == Ordinal::finite(k));
}

TEST_CASE("outcome examples from the abelian game") {
    Solver solver;
    // The F_p-vector-space game at dimension 3 is a first-player win.
    CHECK(solver.outcome(abelian_position(canonicalize({2, 2, 2}))).normal == NP::N);
    CHECK(solver.outcome(abelian_position(canonicalize({4, 8}))).normal == NP::N);
    CHECK(solver.nimber(abelian_position(canonicalize({12}))) == Ordinal::finite(3));
}

TEST_CASE("compound option enumeration") {
    auto c = compound({star(1), star(1)});
    auto opts = c->options();
    CHECK(opts.size() == 3); // (*0,*1), (*1,*0), (*0,*0)
    std::set<std::string> keys;
    for (const auto& o : opts) keys.insert(o->key());
    CHECK(keys == std::set<std::string>{"v{*0;*1}", "v{*0;*0}"});

    CHECK(compound({star(0), star(0)})->terminal());
    CHECK_FALSE(compound({star(0), star(1)})->terminal());
    CHECK_THROWS_AS(compound({}), std::invalid_argument);
}

TEST_CASE("compound values from extra options") {
    Solver solver;
    auto h_prime = std::make_shared<NimPile>(1, std::vector<std::shared_ptr<const NimPile>>{star(2)});
    CHECK(solver.nimber(h_prime) == Ordinal::finite(1));
    CHECK(solver.nimber(compound({star(1), star(1)})) == Ordinal::finite(2));
    CHECK(solver.nimber(compound({star(1), star(2)})) == Ordinal::finite(3));
    CHECK(solver.nimber(compound({star(1), h_prime})) == Ordinal::finite(4));
}

TEST_CASE("two-pile selective compound outcomes") {
    // Normal play: P only when both piles are empty. Misere play: P exactly
    // when one pile is gone and the other holds a single counter (the mover
    // must take it and thereby lose).
    Solver solver;
    for (std::uint64_t n = 0; n <= 4; ++n)
        for (std::uint64_t m = 0; m <= 4; ++m) {
            Outcome o = solver.outcome(compound({star(n), star(m)}));
            CHECK(o.normal == (n == 0 && m == 0 ? NP::P : NP::N));
            CHECK(o.misere == (n + m == 1 ? NP::P : NP::N));
        }
}

TEST_CASE("compound of plain piles adds sizes") {
    Solver solver;
    for (std::uint64_t n = 0; n <= 4; ++n)
        for (std::uint64_t m = 0; m <= 4; ++m)
            CHECK(solver.nimber(compound({star(n), star(m)})) ==
                  natural_sum(Ordinal::finite(n), Ordinal::finite(m)));
}

TEST_CASE("compound outcome shortcuts") {
    Outcome p{NP::P, NP::N}, n{NP::N, NP::N};
    CHECK(compound_normal_outcome({p, p}) == NP::P);
    CHECK(compound_normal_outcome({p, n}) == NP::N);
    CHECK(compound_normal_outcome({}) == NP::P);

    // Lattice game rows (n, m) from the two-vector-space compound.
    auto lattice = [](int a, int b) {
        std::vector<std::pair<bool, Outcome>> parts;
        parts.emplace_back(a == 0, Outcome{a % 2 == 0 ? NP::P : NP::N, a % 2 == 0 ? NP::N : NP::P});
        parts.emplace_back(b == 0, Outcome{b % 2 == 0 ? NP::P : NP::N, b % 2 == 0 ? NP::N : NP::P});
        return compound_misere_outcome(parts);
    };
    CHECK(lattice(1, 0) == NP::P);
    CHECK(lattice(1, 1) == NP::N);
    CHECK(lattice(4, 4) == NP::P);
    CHECK(lattice(0, 0) == NP::N);
}

TEST_CASE("compound shortcuts agree with brute force over the small-game pool") {
    Solver solver;
    std::vector<PositionPtr> pool;
    for (std::uint64_t k = 0; k <= 4; ++k) pool.push_back(star(k));
    for (const FinGenAbGroup& a : verify::all_finite_abelian(64)) pool.push_back(abelian_position(a));

    auto agrees = [&](const std::vector<PositionPtr>& parts) {
        Outcome brute = solver.outcome(compound(parts));
        std::vector<Outcome> outs;
        std::vector<std::pair<bool, Outcome>> flagged;
        for (const auto& p : parts) {
            Outcome o = solver.outcome(p);
            outs.push_back(o);
            flagged.emplace_back(p->terminal(), o);
        }
        return brute.normal == compound_normal_outcome(outs) &&
               brute.misere == compound_misere_outcome(flagged);
    };

    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) CHECK(agrees({pool[i], pool[j]}));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<PositionPtr> parts{pool[rng() % pool.size()], pool[rng() % pool.size()],
                                       pool[rng() % pool.size()]};
        CHECK(agrees(parts));
    }
}

TEST_CASE("winning option tie break is first in enumeration order") {
    Solver solver;
    auto pos = star(3); // every option wins nothing; *0 is the only P option
    PositionPtr w = solver.winning_option(pos, Rule::Normal);
    REQUIRE(w);
    CHECK(w->key() == "*0");
}

TEST_CASE("memo table rejects conflicting re-insertion") {
    MemoTable memo;
    MemoTable::Entry e;
    e.outcome = Outcome{NP::P, NP::N};
    memo.insert("k", e);
    memo.insert("k", e); // equal is fine
    e.outcome = Outcome{NP::N, NP::N};
    CHECK_THROWS_AS(memo.insert("k", e), std::logic_error);
}

TEST_CASE("position cap") {
    Solver solver(Solver::Config{10, true});
    CHECK_THROWS_AS(solver.solve(star(50)), resource_limit_error);
}

TEST_CASE("cache round trip") {
    Solver solver;
    solver.solve(abelian_position(canonicalize({4, 8})));
    std::stringstream file;
    solver.save_cache(file);

    Solver reloaded;
    reloaded.load_cache(file);
    CHECK(reloaded.memo().size() == solver.memo().size());
    CHECK(reloaded.outcome(abelian_position(canonicalize({4, 8}))).normal == NP::N);

    std::stringstream again;
    reloaded.save_cache(again);
    CHECK(again.str() == file.str());
}

TEST_CASE("outcome-only mode skips nimbers") {
    Solver solver(Solver::Config{1000000, false});
    CHECK(solver.outcome(star(2)).normal == NP::N);
    CHECK_THROWS_AS(solver.nimber(star(2)), std::logic_error);
}
