#include "doctest.h"

#include "monopath/game_adapters.hpp"
#include "monopath/lattice_game.hpp"
#include "monopath/online_game.hpp"
#include "monopath/witness.hpp"

#include <cmath>

using namespace monopath;

namespace {

GridPoint pt(std::initializer_list<int> c) { return GridPoint{std::vector<int>(c)}; }

// positions by direct counting
std::size_t position_oracle(const GridPoint& p, const std::vector<GridPoint>& S) {
    std::size_t best = S.size();
    for (std::size_t k = 0; k < p.dim(); ++k) {
        std::size_t cnt = 0;
        for (const auto& s : S) {
            cnt += p[k] >= s[k] ? 1 : 0;
        }
        best = std::min(best, cnt);
    }
    return best;
}

// every stage plays a new point of [n-1]^q until one leaves the box, so
// exact holds against coordinators that never win early
void check_builder_bounds(const LatticeTranscript& t, int q, int n, bool exact = true) {
    CHECK_FALSE(t.validate());
    CHECK(t.won());
    const auto b = checked_pow(static_cast<std::uint64_t>(n - 1), static_cast<unsigned>(q)) + 1;
    if (exact) {
        CHECK(t.stages.size() == b);
    } else {
        CHECK(t.stages.size() <= b);
    }
    CHECK(static_cast<double>(t.max_stage_steps()) <= std::ceil(step_bound(q, n)));
}

class BadPicker : public LatticeBuilder {
public:
    std::optional<std::size_t> pick(const LatticeBoard& b) override {
        if (b.stage() == 1) {
            return std::nullopt;
        }
        return b.points().size() + 1;
    }
};

class OutOfRangePainter : public OnlinePainter {
public:
    Color paint(const OnlineBoard&, std::span<const Vertex>) override { return 3; }
};

} // namespace

TEST_CASE("product order and positions") {
    CHECK(precedes(pt({1, 1}), pt({1, 2})));
    CHECK_FALSE(precedes(pt({1, 2}), pt({1, 2})));
    CHECK_FALSE(precedes(pt({1, 2}), pt({2, 1})));

    CHECK(position(pt({3, 3}), {pt({3, 3})}) == 1);
    CHECK(position(pt({2, 1}), {pt({1, 2}), pt({2, 1})}) == 1);
    CHECK_THROWS(position(pt({1, 1}), {}));

    // some member of S has position at least |S| / q
    Rng rng = make_rng(5);
    std::uniform_int_distribution<int> coord(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const int q = 2 + trial % 3;
        std::vector<GridPoint> S(1 + static_cast<std::size_t>(trial % 9));
        for (auto& s : S) {
            for (int k = 0; k < q; ++k) {
                s.coords.push_back(coord(rng));
            }
        }
        std::size_t best = 0;
        for (const auto& s : S) {
            REQUIRE(position(s, S) == position_oracle(s, S));
            best = std::max(best, position(s, S));
        }
        CHECK(static_cast<double>(best) * q >= static_cast<double>(S.size()));
    }
}

TEST_CASE("step bound") {
    CHECK(step_bound(2, 4) == doctest::Approx(3.0));
    CHECK(step_bound(2, 3) == doctest::Approx(1.0 + std::log2(3.0)));
}

TEST_CASE("builder strategy against the level-filling coordinator") {
    for (int n = 1; n <= 6; ++n) {
        auto b = builder_strategy(2, n);
        auto c = coordinator_strategy(2, n);
        const auto t = play_lattice(*b, *c, 2, n);
        CAPTURE(n);
        check_builder_bounds(t, 2, n);
    }
    auto b = builder_strategy(2, 4);
    auto c = coordinator_strategy(2, 4);
    const auto t = play_lattice(*b, *c, 2, 4);
    CHECK(t.stages.size() == 10);
    CHECK(t.total_steps() <= 30);

    // each stage that adds a new point used at least log_q |S_0| steps
    for (int n = 3; n <= 6; ++n) {
        auto bb = builder_strategy(2, n);
        auto cc = coordinator_strategy(2, n);
        const auto tt = play_lattice(*bb, *cc, 2, n);
        for (const auto& st : tt.stages) {
            const bool winning = std::ranges::any_of(st.point.coords, [&](int x) { return x >= n; });
            if (st.new_point && st.pool && !winning) {
                CHECK(static_cast<double>(st.steps.size()) >= std::log2(static_cast<double>(*st.pool)) - 1e-9);
            }
        }
    }
}

TEST_CASE("trivial lattice games") {
    auto b1 = builder_strategy(2, 1);
    auto c1 = coordinator_strategy(2, 1);
    const auto one = play_lattice(*b1, *c1, 2, 1);
    CHECK(one.stages.size() == 1);

    auto b2 = builder_strategy(2, 2);
    auto c2 = coordinator_strategy(2, 2);
    const auto two = play_lattice(*b2, *c2, 2, 2);
    REQUIRE(two.stages.size() == 2);
    CHECK(two.stages[0].steps.empty());
    CHECK(two.stages[1].steps.size() == 1);
}

TEST_CASE("builder strategy against every tested coordinator") {
    for (int q = 2; q <= 3; ++q) {
        for (int n = 2; n <= 6; ++n) {
            CAPTURE(q);
            CAPTURE(n);
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                auto b = builder_strategy(q, n);
                auto ext = extension_coordinator(q, n, seed);
                check_builder_bounds(play_lattice(*b, *ext, q, n), q, n);
                auto b2 = builder_strategy(q, n);
                auto rnd = random_coordinator(q, n, seed);
                check_builder_bounds(play_lattice(*b2, *rnd, q, n), q, n, false);
            }
        }
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto b = builder_strategy(2, 3);
        auto c = extension_coordinator(2, 3, seed);
        CHECK(play_lattice(*b, *c, 2, 3).stages.size() == 5);
    }
}

TEST_CASE("coordinator strategy against random builders") {
    bool saw_repeat = false;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto b = random_lattice_builder(seed);
        auto c = coordinator_strategy(2, 4);
        const auto t = play_lattice(*b, *c, 2, 4);
        CHECK_FALSE(t.validate());
        CHECK(t.won());
        for (std::size_t i = 0; i < t.stages.size(); ++i) {
            if (!t.stages[i].new_point) {
                saw_repeat = true;
                bool earlier = false;
                for (std::size_t j = 0; j < i; ++j) {
                    earlier = earlier || t.stages[j].point == t.stages[i].point;
                }
                CHECK(earlier);
            }
        }
    }
    // early stage ends make the coordinator replay an old point
    CHECK(saw_repeat);
}

TEST_CASE("growth of the builder's total steps") {
    for (int n = 3; n <= 8; ++n) {
        auto b = builder_strategy(2, n);
        auto c = coordinator_strategy(2, n);
        const auto t = play_lattice(*b, *c, 2, n);
        const double scale = n * n * std::log2(static_cast<double>(n));
        CHECK(static_cast<double>(t.total_steps()) >= 0.1 * scale);
        CHECK(static_cast<double>(t.total_steps()) <= 10 * scale);
    }
}

TEST_CASE("lattice transcripts catch tampering") {
    auto b = builder_strategy(2, 3);
    auto c = coordinator_strategy(2, 3);
    auto t = play_lattice(*b, *c, 2, 3);
    REQUIRE_FALSE(t.validate());
    auto bad = t;
    bad.stages[1].point = bad.stages[0].point;
    bad.stages[1].point.coords[0] = 0;
    CHECK(bad.validate());
    auto short_game = t;
    short_game.stages.pop_back();
    CHECK(short_game.validate());
}

TEST_CASE("misbehaving strategies are named") {
    BadPicker bad;
    auto c = coordinator_strategy(2, 3);
    CHECK_THROWS_WITH_AS(play_lattice(bad, *c, 2, 3), doctest::Contains("builder"), StrategyError);

    auto builder = complete_builder();
    OutOfRangePainter painter;
    CHECK_THROWS_WITH_AS(play_online_ramsey(*builder, painter, 2, 2, 3), doctest::Contains("painter"),
                         StrategyError);
}

TEST_CASE("online Ramsey game") {
    auto cb = complete_builder();
    auto rp = random_painter(2, 1);
    const auto two = play_online_ramsey(*cb, *rp, 2, 2, 2);
    CHECK(two.total_edges() == 1);
    CHECK_FALSE(two.validate());

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        for (int k = 2; k <= 3; ++k) {
            auto b = random_online_builder(seed);
            auto p = random_painter(2, seed);
            const auto t = play_online_ramsey(*b, *p, k, 2, 4);
            CHECK_FALSE(t.validate());
            CHECK(t.path.length() == 4);

            auto mb = random_online_builder(seed);
            auto mp = random_painter(2, seed + 1);
            OnlineOptions opt;
            opt.modified = true;
            const auto m = play_online_ramsey(*mb, *mp, k, 2, 4, opt);
            CHECK_FALSE(m.validate());
            for (std::size_t s = static_cast<std::size_t>(k); s <= m.stages.size(); ++s) {
                CHECK_FALSE(m.stages[s - 1].empty());
            }
        }
    }

    auto cp = constant_painter(2);
    auto cb2 = complete_builder();
    const auto mono = play_online_ramsey(*cb2, *cp, 2, 2, 4);
    CHECK(mono.path == MonotonePath{{1, 2, 3, 4}, 2});
}

TEST_CASE("builder adapter bounds the number of edges") {
    const double bound = 5 * step_bound(2, 3);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto lb = builder_strategy(2, 3);
        auto ob = online_builder_from_lattice(*lb, 2, 3);
        auto p = random_painter(2, seed);
        const auto t = play_online_ramsey(*ob, *p, 2, 2, 3);
        CHECK_FALSE(t.validate());
        CHECK(static_cast<double>(t.total_edges()) <= bound);
    }
}

TEST_CASE("labelling painter forces many edges") {
    // a witness without paths of n - k + 1 vertices keeps the game going
    const auto w = grid_witness_k2(2, 3);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto b = random_online_builder(seed);
        auto p = labelling_painter(w);
        const auto t = play_online_ramsey(*b, *p, 2, 2, 4);
        CHECK_FALSE(t.validate());
        CHECK(t.total_edges() >= 5);  // N_2(2, 3)
    }
    auto lb = builder_strategy(2, 4);
    auto ob = online_builder_from_lattice(*lb, 2, 4);
    auto p = labelling_painter(w);
    CHECK(play_online_ramsey(*ob, *p, 2, 2, 4).total_edges() >= 5);

    DigraphColoring phi(2, 2);
    phi.set(1, 2, 1);
    phi.set(2, 1, 2);
    const auto w3 = stepup3_witness(phi, 2, 4);  // no path of 4 = n - k + 1 at n = 6
    auto cb = complete_builder();
    auto p3 = labelling_painter(w3);
    CHECK(play_online_ramsey(*cb, *p3, 3, 2, 6).total_edges() >= 5);
}

TEST_CASE("adapters translate strategies one to one") {
    SUBCASE("constant painter answers coordinate 1") {
        auto painter = constant_painter(1);
        auto coord = coordinator_from_painter(*painter, 2, 3);
        auto b = builder_strategy(2, 3);
        const auto t = play_lattice(*b, *coord, 2, 3);
        CHECK_FALSE(t.validate());
        for (const auto& st : t.stages) {
            for (const auto& s : st.steps) {
                CHECK(s.coord == 1);
            }
        }
    }

    SUBCASE("lattice play and online play use the same number of moves") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const int n = 3 + static_cast<int>(seed % 3);
            auto b = builder_strategy(2, n);
            auto c = random_coordinator(2, n, seed);
            const auto direct = play_lattice(*b, *c, 2, n);

            auto b2 = builder_strategy(2, n);
            auto c2 = random_coordinator(2, n, seed);
            auto ob = online_builder_from_lattice(*b2, 2, n);
            auto op = painter_from_coordinator(*c2, 2, n);
            const auto adapted = play_online_ramsey(*ob, *op, 2, 2, n);
            CHECK_FALSE(adapted.validate());
            CHECK(adapted.total_edges() == direct.total_steps());

            auto rb = random_online_builder(seed);
            auto rp = random_painter(2, seed);
            const auto online = play_online_ramsey(*rb, *rp, 2, 2, n);

            auto rb2 = random_online_builder(seed);
            auto rp2 = random_painter(2, seed);
            auto lb = lattice_builder_from_online(*rb2, 2, n);
            auto lc = coordinator_from_painter(*rp2, 2, n);
            const auto lattice = play_lattice(*lb, *lc, 2, n);
            CHECK_FALSE(lattice.validate());
            CHECK(lattice.total_steps() == online.total_edges());
        }
    }
}
