#include "doctest.h"
#include "oracles.hpp"

#include "monopath/geometry.hpp"
#include "monopath/transitive.hpp"

#include <set>

using namespace monopath;

namespace {

using EdgeSet = std::set<std::vector<Vertex>>;

// fixpoint of the two-windows rule by scanning every (k+1)-subset
EdgeSet closure_oracle(int k, Vertex n, EdgeSet edges) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Vertex> t = first_subset(k + 1);
        if (n < static_cast<Vertex>(k + 1)) {
            break;
        }
        do {
            const std::vector<Vertex> lo(t.begin(), t.end() - 1), hi(t.begin() + 1, t.end());
            if (edges.count(lo) && edges.count(hi)) {
                for (std::size_t drop = 0; drop < t.size(); ++drop) {
                    std::vector<Vertex> e;
                    for (std::size_t i = 0; i < t.size(); ++i) {
                        if (i != drop) {
                            e.push_back(t[i]);
                        }
                    }
                    changed = edges.insert(e).second || changed;
                }
            }
        } while (next_colex(t, n));
    }
    return edges;
}

EdgeSet as_set(const std::vector<std::vector<Vertex>>& v) { return EdgeSet(v.begin(), v.end()); }

std::vector<std::vector<Vertex>> path_edges(int k, Vertex n) {
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 1; s + static_cast<Vertex>(k) - 1 <= n; ++s) {
        std::vector<Vertex> e;
        for (int i = 0; i < k; ++i) {
            e.push_back(s + static_cast<Vertex>(i));
        }
        out.push_back(e);
    }
    return out;
}

// k = 2: color 1 iff the permutation keeps the pair in order; both classes
// are orders, hence transitive
OrderedColoring permutation_coloring(Vertex n, std::uint64_t seed) {
    std::vector<Vertex> perm(n);
    for (Vertex i = 0; i < n; ++i) {
        perm[i] = i;
    }
    Rng rng = make_rng(seed, 4);
    std::shuffle(perm.begin(), perm.end(), rng);
    return OrderedColoring::from_function(2, 2, n, [&](std::span<const Vertex> e) {
        return perm[e[0] - 1] < perm[e[1] - 1] ? Color{1} : Color{2};
    });
}

} // namespace

TEST_CASE("transitivity check") {
    CHECK_FALSE(is_transitive(OrderedColoring::uniform(3, 2, 6)));

    const auto parity = OrderedColoring::from_function(2, 2, 4, [](std::span<const Vertex> e) {
        return (e[1] - e[0]) % 2 == 1 ? Color{1} : Color{2};
    });
    const auto v = is_transitive(parity);
    REQUIRE(v);
    CHECK(v->tuple == std::vector<Vertex>{1, 2, 3});
    CHECK(v->color == 1);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK_FALSE(is_transitive(permutation_coloring(9, seed)));
    }
}

TEST_CASE("transitive closure") {
    const std::vector<std::vector<Vertex>> one{{2, 4, 5}};
    CHECK(transitive_closure(3, 6, one) == one);
    const std::vector<std::vector<Vertex>> apart{{1, 2}, {3, 4}};
    CHECK(as_set(transitive_closure(2, 5, apart)) == as_set(apart));
    CHECK_THROWS_AS(transitive_closure(2, 3, std::vector<std::vector<Vertex>>{{1, 4}}), std::invalid_argument);

    // consecutive path edges close up to the complete hypergraph
    for (int k = 2; k <= 4; ++k) {
        for (Vertex n = static_cast<Vertex>(k); n <= 8; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            const auto c = transitive_closure(k, n, path_edges(k, n));
            CHECK(c.size() == binomial(n, static_cast<std::uint64_t>(k)));
        }
    }

    // agrees with the naive fixpoint; idempotent and monotone
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int k = 2 + static_cast<int>(seed % 3);
        const Vertex n = 7;
        Rng rng = make_rng(seed, 8);
        std::vector<std::vector<Vertex>> edges, more;
        std::vector<Vertex> e = first_subset(k);
        do {
            const auto r = rng() % 10;
            if (r < 2) {
                edges.push_back(e);
            }
            if (r < 3) {
                more.push_back(e);
            }
        } while (next_colex(e, n));
        const auto c = transitive_closure(k, n, edges);
        CHECK(as_set(c) == closure_oracle(k, n, as_set(edges)));
        CHECK(transitive_closure(k, n, c) == c);
        const auto cm = as_set(transitive_closure(k, n, more));
        for (const auto& x : c) {
            CHECK(cm.count(x) == 1);
        }
    }
}

TEST_CASE("cliques from paths in transitive colorings") {
    const auto one = extract_clique(OrderedColoring::uniform(3, 2, 6), 4);
    CHECK(one.vertices == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(one.color == 1);

    const auto parity = OrderedColoring::from_function(2, 2, 4, [](std::span<const Vertex> e) {
        return (e[1] - e[0]) % 2 == 1 ? Color{1} : Color{2};
    });
    CHECK_THROWS_AS(extract_clique(parity, 2), std::invalid_argument);
    CHECK_THROWS_AS(extract_clique(permutation_coloring(4, 1), 5), NoPathFound);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto c = permutation_coloring(10, seed);
        const auto n = static_cast<int>(longest_mono_path_length(c));
        const auto cl = extract_clique(c, n);
        CHECK(cl.vertices.size() == static_cast<std::size_t>(n));
        CHECK(is_monochromatic_clique(c, cl));
        CHECK(oracle::all_subsets_one_color(c, cl.vertices, cl.color));
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto c = color_triples(random_family(9, seed));
        const auto n = static_cast<int>(longest_mono_path_length(c));
        const auto cl = extract_clique(c, n);
        CHECK(oracle::all_subsets_one_color(c, cl.vertices, cl.color));
    }
}
