#include "monopath/witness.hpp"

#include <algorithm>

namespace monopath {

namespace {

// first coordinate (1-based) where grid points u and v differ; points are
// base-(n-1) digit strings, most significant digit first
Color grid_color(int q, int n, Vertex u, Vertex v) {
    const auto base = static_cast<std::uint64_t>(n - 1);
    std::uint64_t x = u - 1, y = v - 1;
    Color c = static_cast<Color>(q);
    for (int i = q; i >= 1; --i) {
        if (x % base != y % base) {
            c = static_cast<Color>(i);
        }
        x /= base;
        y /= base;
    }
    return c;
}

void check_self(std::uint16_t longest, int n, const char* what) {
    if (longest >= n) {
        throw std::logic_error(std::string(what) + ": output has a monochromatic path of " +
                               std::to_string(longest) + " vertices");
    }
}

} // namespace

OrderedColoring grid_witness_k2(int q, int n) {
    if (q < 1 || n < 2) {
        throw std::invalid_argument("grid_witness_k2: need q >= 1 and n >= 2");
    }
    const auto size = checked_pow(static_cast<std::uint64_t>(n - 1), static_cast<unsigned>(q));
    if (size > 65535) {
        throw std::invalid_argument("grid_witness_k2: more than 65535 vertices");
    }
    auto c = OrderedColoring::from_function(2, q, static_cast<Vertex>(size),
                                            [&](std::span<const Vertex> e) {
                                                return grid_color(q, n, e[0], e[1]);
                                            });
    check_self(longest_mono_path_length(c), n, "grid_witness_k2");
    return c;
}

StepUp3Coloring::StepUp3Coloring(DigraphColoring phi) : phi_(std::move(phi)) {
    if (phi_.num_vertices() > 16) {
        throw std::invalid_argument("stepup3: seed larger than 16 vertices");
    }
    n_ = Vertex{1} << phi_.num_vertices();
}

Color StepUp3Coloring::color(std::span<const Vertex> e) const {
    const int d1 = delta(e[0], e[1]);
    const int d2 = delta(e[1], e[2]);
    if (d1 == d2) {
        throw std::logic_error("stepup3: equal consecutive deltas");
    }
    return phi_.color(static_cast<Vertex>(d1 + 1), static_cast<Vertex>(d2 + 1));
}

void StepUp3Coloring::colors_ending_with(std::span<const Vertex> suffix, std::span<Color> out) const {
    const auto d2 = static_cast<Vertex>(delta(suffix[0], suffix[1]) + 1);
    const Vertex x = suffix[0] - 1;
    // a - 1 < x first differs from x at a set bit p of x; those a - 1 form
    // the block [x with bits <= p cleared, + 2^p), all with delta p
    for (int p = 0; p < 32; ++p) {
        if (((x >> p) & 1U) == 0) {
            continue;
        }
        const auto d1 = static_cast<Vertex>(p + 1);
        if (d1 == d2) {
            throw std::logic_error("stepup3: equal consecutive deltas");
        }
        const auto lo = static_cast<Vertex>((std::uint64_t{x} >> (p + 1)) << (p + 1));
        std::fill_n(out.begin() + lo, Vertex{1} << p, phi_.color(d1, d2));
    }
}

StepUp3Coloring stepup3_source(const DigraphColoring& phi, int q, int n) {
    if (phi.num_colors() != q) {
        throw PreconditionError("stepup3: seed uses " + std::to_string(phi.num_colors()) +
                                " colors, expected " + std::to_string(q));
    }
    if (n < 2 || !longest_mono_walks(phi).walk_free(static_cast<std::size_t>(n - 1))) {
        throw PreconditionError("stepup3: seed has a monochromatic walk of " +
                                std::to_string(n - 1) + " vertices");
    }
    return StepUp3Coloring(phi);
}

OrderedColoring stepup3_witness(const DigraphColoring& phi, int q, int n) {
    if (phi.num_vertices() > 9) {
        throw std::invalid_argument("stepup3_witness: seed too large to materialize");
    }
    auto c = OrderedColoring::materialize(stepup3_source(phi, q, n));
    check_self(longest_mono_path_length(c), n, "stepup3_witness");
    return c;
}

Color nonmonotone_color(std::span<const int> d) {
    for (std::size_t i = 1; i + 1 < d.size(); ++i) {
        const bool is_max = d[i - 1] < d[i] && d[i] > d[i + 1];
        const bool is_min = d[i - 1] > d[i] && d[i] < d[i + 1];
        if (is_max || is_min) {
            const bool even = (i + 1) % 2 == 0; // 1-based position
            return ((even && is_max) || (!even && is_min)) ? 1 : 2;
        }
    }
    return 0;
}

StepUpKColoring::StepUpKColoring(OrderedColoring psi) : psi_(std::move(psi)) {
    if (psi_.num_vertices() > 16) {
        throw std::invalid_argument("stepup_k: seed larger than 16 vertices");
    }
    n_ = Vertex{1} << psi_.num_vertices();
}

Color StepUpKColoring::color(std::span<const Vertex> e) const {
    const std::size_t m = e.size() - 1;
    int d[16];
    for (std::size_t i = 0; i < m; ++i) {
        d[i] = delta(e[i], e[i + 1]);
        if (i > 0 && d[i] == d[i - 1]) {
            throw std::logic_error("stepup_k: equal consecutive deltas");
        }
    }
    const Color c = nonmonotone_color(std::span<const int>(d, m));
    if (c != 0) {
        return c;
    }
    Vertex s[16];
    for (std::size_t i = 0; i < m; ++i) {
        s[i] = static_cast<Vertex>(d[i] + 1);
    }
    std::sort(s, s + m);
    return psi_.color(std::span<const Vertex>(s, m));
}

void StepUpKColoring::colors_ending_with(std::span<const Vertex> suffix, std::span<Color> out) const {
    Vertex e[16];
    std::copy(suffix.begin(), suffix.end(), e + 1);
    for (Vertex a = 1; a < suffix[0]; ++a) {
        e[0] = a;
        out[a - 1] = color(std::span<const Vertex>(e, suffix.size() + 1));
    }
}

StepUpKColoring stepup_k_source(const OrderedColoring& psi, int n) {
    if (psi.uniformity() < 3 || psi.uniformity() > 15) {
        throw PreconditionError("stepup_k: seed uniformity must be in [3, 15]");
    }
    if (psi.num_colors() < 2) {
        throw PreconditionError("stepup_k: need at least two colors");
    }
    const auto longest = longest_mono_path_length(psi);
    if (longest >= n) {
        throw PreconditionError("stepup_k: seed has a monochromatic path of " +
                                std::to_string(longest) + " vertices");
    }
    return StepUpKColoring(psi);
}

OrderedColoring stepup_k_witness(const OrderedColoring& psi, int n) {
    const auto src = stepup_k_source(psi, n);
    if (binomial(src.num_vertices(), static_cast<std::uint64_t>(src.uniformity())) > 50'000'000) {
        throw std::invalid_argument("stepup_k_witness: output too large to materialize");
    }
    auto c = OrderedColoring::materialize(src);
    check_self(longest_mono_path_length(c), n + 3, "stepup_k_witness");
    return c;
}

SparseAdversary sparse_adversary_coloring(const OrderedGraph& g, int q, int n1, int n2,
                                          const DigraphColoring& phi) {
    if (q < 2 || n1 < 2 || n2 < 2) {
        throw std::invalid_argument("sparse adversary: need q, n1, n2 >= 2");
    }
    if (phi.num_colors() != q || !longest_mono_walks(phi).walk_free(static_cast<std::size_t>(n1))) {
        throw PreconditionError("sparse adversary: phi is not walk-free at level n1");
    }
    SparseAdversary out;
    out.t = phi.num_vertices();
    const auto n2_bound = checked_pow(static_cast<std::uint64_t>(n2 - 1), static_cast<unsigned>(q)) + 1;
    out.within_edge_budget = 2 * g.num_edges() < out.t * n2_bound;

    const auto core = t_core(g, out.t);
    if (core.core.size() >= n2_bound) {
        throw PreconditionError("sparse adversary: edge budget exceeded, the " +
                                std::to_string(out.t) + "-core has " +
                                std::to_string(core.core.size()) + " vertices");
    }
    out.v2 = core.core;
    out.v1 = core.deletion_order;
    std::sort(out.v1.begin(), out.v1.end());

    // greedy proper coloring of V1, last deleted first: each vertex then has
    // fewer than t colored neighbours
    const Vertex n = g.num_vertices();
    const auto adj = g.adjacency();
    std::vector<bool> in_core(n + 1, false);
    for (Vertex v : out.v2) {
        in_core[v] = true;
    }
    out.v1_classes.assign(n, 0);
    for (auto it = core.deletion_order.rbegin(); it != core.deletion_order.rend(); ++it) {
        std::vector<bool> used(out.t + 2, false);
        for (Vertex w : adj[*it]) {
            const Vertex cw = out.v1_classes[w - 1];
            if (cw != 0 && cw <= out.t + 1) {
                used[cw] = true;
            }
        }
        Vertex c = 1;
        while (used[c]) {
            ++c;
        }
        if (c > out.t) {
            throw std::logic_error("sparse adversary: degeneracy coloring needs more than t classes");
        }
        out.v1_classes[*it - 1] = c;
    }

    std::vector<Vertex> core_rank(n + 1, 0);
    for (std::size_t i = 0; i < out.v2.size(); ++i) {
        core_rank[out.v2[i]] = static_cast<Vertex>(i + 1);
    }
    out.coloring = GraphColoring{g, q, {}};
    out.coloring.colors.reserve(g.num_edges());
    for (auto [v, w] : g.edges()) {
        Color c;
        if (!in_core[v] && !in_core[w]) {
            c = phi.color(out.v1_classes[v - 1], out.v1_classes[w - 1]);
        } else if (in_core[v] && in_core[w]) {
            c = grid_color(q, n2, core_rank[v], core_rank[w]);
        } else {
            c = in_core[w] ? 1 : 2; // v < w always
        }
        out.coloring.colors.push_back(c);
    }

    const auto longest = longest_mono_paths(out.coloring).longest();
    if (longest >= static_cast<std::size_t>(n1 + n2 - 1)) {
        throw std::logic_error("sparse adversary: output has a monochromatic path of " +
                               std::to_string(longest) + " vertices");
    }
    return out;
}

SparseAdversary sparse_adversary_coloring(const OrderedGraph& g, int q, int n1, int n2) {
    const auto w = largest_walk_free(q, n1, 64, SearchBudget{std::uint64_t{50'000'000}, std::nullopt});
    return sparse_adversary_coloring(g, q, n1, n2, w.witness);
}

} // namespace monopath
