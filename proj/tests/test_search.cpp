#include "doctest.h"
#include "oracles.hpp"

#include "monopath/game_adapters.hpp"
#include "monopath/path_finder.hpp"
#include "monopath/search.hpp"
#include "monopath/witness.hpp"

#include <cmath>

using namespace monopath;

TEST_CASE("witness existence at small sizes") {
    const auto four = exists_witness(4, 2, 2, 3);
    REQUIRE(four.outcome == Outcome::Found);
    CHECK(oracle::longest_path_any(*four.witness) < 3);

    CHECK(exists_witness(5, 2, 2, 3).outcome == Outcome::None);
    // every 2-coloring of the pairs of [5] has a path of 3
    std::size_t free_colorings = 0;
    oracle::for_each_coloring(2, 2, 5, [&](const OrderedColoring& c) {
        if (oracle::longest_path_any(c) < 3) {
            ++free_colorings;
        }
    });
    CHECK(free_colorings == 0);

    const auto six = exists_witness(6, 3, 2, 4);
    REQUIRE(six.outcome == Outcome::Found);
    CHECK(oracle::longest_path_any(*six.witness) < 4);
    CHECK(exists_witness(7, 3, 2, 4).outcome == Outcome::None);
}

TEST_CASE("search agrees with enumeration on tiny instances") {
    struct Case {
        int k, q, n;
        Vertex N;
    };
    for (const Case cs : {Case{2, 2, 3, 4}, Case{2, 2, 3, 5}, Case{2, 3, 3, 5}, Case{3, 2, 4, 5},
                          Case{3, 2, 3, 5}, Case{4, 2, 5, 6}, Case{2, 2, 4, 6}}) {
        CAPTURE(cs.k);
        CAPTURE(cs.N);
        bool brute = false;
        oracle::for_each_coloring(cs.k, cs.q, cs.N, [&](const OrderedColoring& c) {
            if (!brute && oracle::longest_path_any(c) < static_cast<std::size_t>(cs.n)) {
                brute = true;
            }
        });
        const auto r = exists_witness(cs.N, cs.k, cs.q, cs.n);
        CHECK((r.outcome == Outcome::Found) == brute);
        if (r.witness) {
            CHECK(oracle::longest_path_any(*r.witness) < static_cast<std::size_t>(cs.n));
        }
    }
}

TEST_CASE("exact values") {
    CHECK(n_exact(2, 2, 3) == 5);
    CHECK(n_exact(2, 2, 4) == 10);
    CHECK(n_exact(2, 3, 3) == 9);
    CHECK(n_exact(3, 2, 4) == 7);
    for (int n = 2; n <= 6; ++n) {
        CHECK(n_exact(2, 1, n) == static_cast<Vertex>(n));
        CHECK(n_exact(3, 1, n) == static_cast<Vertex>(n));
    }
    // a stepped-up walk-free seed bounds N_3 from below
    const auto fw = largest_walk_free(2, 3, 10);
    CHECK(n_exact(3, 2, 4) > (Vertex{1} << (fw.f - 1)));
}

TEST_CASE("budget exhaustion is its own outcome") {
    SearchBudget tiny;
    tiny.node_cap = 3;
    CHECK(exists_witness(9, 2, 3, 3, tiny).outcome == Outcome::BudgetExhausted);
    CHECK_THROWS_AS(n_exact(2, 3, 3, tiny), BudgetExhausted);
}

TEST_CASE("tower function") {
    CHECK(tower(1, 7, 2) == 7);
    CHECK(tower(2, 3, 2) == 8);
    CHECK(tower(3, 2, 2) == 16);
    CHECK(tower(4, 2, 2) == 65536);
    CHECK_THROWS_AS(tower(6, 2, 2), std::overflow_error);
    // N_k(q, n) <= t_k(q - 1, n) for k >= 3
    CHECK(BigInt(n_exact(3, 2, 4)) <= tower(3, 1, 4));
}

TEST_CASE("recursive path finder") {
    CHECK(recursive_threshold(2, 2, 3) == 5u);
    CHECK(recursive_threshold(3, 2, 4) == 10u);

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto a = oracle::random_coloring(2, 2, 5, seed);
        const auto p = find_path_recursive(a, 3);
        CHECK(p.length() == 3);
        CHECK(verify_path(a, p));

        const auto b = oracle::random_coloring(3, 2, 10, seed);
        const auto r = find_path_recursive(b, 4);
        CHECK(r.length() == 4);
        CHECK(verify_path(b, r));
    }

    const auto mono = OrderedColoring::uniform(3, 2, 10);
    CHECK(find_path_recursive(mono, 4) == MonotonePath{{1, 2, 3, 4}, 1});

    CHECK_THROWS_AS(find_path_recursive(oracle::random_coloring(3, 2, 9, 1), 4), BelowThreshold);
}

TEST_CASE("recursive finder reports NotFound on path-free colorings") {
    DigraphColoring phi(2, 2);
    phi.set(1, 2, 1);
    phi.set(2, 1, 2);
    const auto s3 = stepup3_witness(phi, 2, 4);
    CHECK_THROWS_AS(find_path_recursive(s3, 4, ThresholdPolicy::Override), NotFound);
    CHECK_FALSE(find_mono_path(s3, 4));

    const auto six = exists_witness(6, 3, 2, 4);
    REQUIRE(six.witness);
    CHECK_THROWS_AS(find_path_recursive(*six.witness, 4, ThresholdPolicy::Override), NotFound);
    CHECK_THROWS_AS(find_path_recursive(grid_witness_k2(2, 4), 4, ThresholdPolicy::Override), NotFound);

    // below the threshold it still succeeds whenever a path exists
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto c = oracle::random_coloring(3, 2, 7, seed);
        CHECK(verify_path(c, find_path_recursive(c, 4, ThresholdPolicy::Override)));
    }
}

TEST_CASE("online reduction") {
    SUBCASE("monochromatic oracle") {
        auto builder = complete_builder();
        const ColorOracle one = [](std::span<const Vertex>) { return Color{1}; };
        const auto r = find_path_online_reduction(one, 3, 2, 4, 64, *builder);
        CHECK(r.path.length() == 4);
        CHECK(r.path.color == 1);
        CHECK(strictly_increasing(r.path.vertices));
        CHECK(r.path.vertices.back() <= 5u);  // within the first n + k - 2 chosen vertices
        CHECK(r.survivor_bound_holds());
    }

    SUBCASE("random oracle against the lattice builder") {
        auto lattice = builder_strategy(2, 5);
        auto builder = online_builder_from_lattice(*lattice, 2, 5);
        const auto chi = random_oracle(2, 11);
        const auto r = find_path_online_reduction(chi, 3, 2, 4, (Vertex{1} << 12) + 1, *builder);
        CHECK(r.path.length() == 4);
        for (std::size_t i = 0; i + 3 <= 4; ++i) {
            const std::vector<Vertex> e(r.path.vertices.begin() + static_cast<std::ptrdiff_t>(i),
                                        r.path.vertices.begin() + static_cast<std::ptrdiff_t>(i + 3));
            CHECK(chi(e) == r.path.color);
        }
        CHECK(r.survivor_bound_holds());
        for (const auto& st : r.stages) {
            CHECK(st.after <= st.before);
            CHECK(static_cast<double>(st.after) * std::pow(2.0, static_cast<double>(st.edges)) >=
                  static_cast<double>(st.before) - 1.0);
        }
        // every path vertex is the largest vertex of an auxiliary edge
        for (Vertex v : r.path.vertices) {
            CHECK(std::any_of(r.records.begin(), r.records.end(),
                              [&](const ReductionRecord& rec) { return rec.edge.back() == v; }));
        }
        CHECK_FALSE(r.game.validate());
    }

    SUBCASE("too few vertices") {
        auto builder = complete_builder();
        CHECK_THROWS_AS(find_path_online_reduction(random_oracle(2, 3), 3, 2, 4, 6, *builder),
                        SurvivorsExhausted);
    }
}
