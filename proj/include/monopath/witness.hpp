#pragma once

#include "monopath/digraph.hpp"
#include "monopath/longest_path.hpp"

namespace monopath {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Vertices are the points of [n-1]^q in lexicographic order (first
// coordinate most significant); an edge gets the first coordinate in which
// its endpoints differ. Each color class strictly increases one coordinate,
// so no color has a monotone path of n vertices.
OrderedColoring grid_witness_k2(int q, int n);

// Index of the most significant bit in which a-1 and b-1 differ (0-based).
inline int delta(Vertex a, Vertex b) {
    return 31 - __builtin_clz((a - 1) ^ (b - 1));
}

// Vertex counts of the stepping-up constructions: 2^(seed size).
struct StepUpParams {
    int q = 2;
    Vertex source_size = 0;

    Vertex target_size() const { return Vertex{1} << source_size; }
};

// chi(a, b, c) = phi(delta(a,b) + 1, delta(b,c) + 1), evaluated on demand so
// that 2^12 vertices never need a C(4096, 3) table.
class StepUp3Coloring {
public:
    explicit StepUp3Coloring(DigraphColoring phi);

    int uniformity() const noexcept { return 3; }
    int num_colors() const noexcept { return phi_.num_colors(); }
    Vertex num_vertices() const noexcept { return n_; }
    const DigraphColoring& seed() const noexcept { return phi_; }
    Color color(std::span<const Vertex> edge) const;
    void colors_ending_with(std::span<const Vertex> suffix, std::span<Color> out) const;

private:
    DigraphColoring phi_;
    Vertex n_;
};

// Throws PreconditionError unless phi has no monochromatic walk of n-1
// vertices and uses q colors.
StepUp3Coloring stepup3_source(const DigraphColoring& phi, int q, int n);
// Materialized and DP-checked for no monochromatic path of n; seeds above
// 9 vertices are refused (use stepup3_source and the DP directly).
OrderedColoring stepup3_witness(const DigraphColoring& phi, int q, int n);

// The nonmonotone rule on a delta sequence (1-based positions): color 1 if
// the first local extremum sits at an even position and is a maximum, or
// at an odd position and is a minimum; color 2 otherwise. Returns 0 for
// monotone sequences.
Color nonmonotone_color(std::span<const int> deltas);

// Monotone delta sequences take psi's color on {delta_i + 1}; the rest use
// nonmonotone_color.
class StepUpKColoring {
public:
    explicit StepUpKColoring(OrderedColoring psi);

    int uniformity() const noexcept { return psi_.uniformity() + 1; }
    int num_colors() const noexcept { return psi_.num_colors(); }
    Vertex num_vertices() const noexcept { return n_; }
    Color color(std::span<const Vertex> edge) const;
    void colors_ending_with(std::span<const Vertex> suffix, std::span<Color> out) const;

private:
    OrderedColoring psi_;
    Vertex n_;
};

// psi must have uniformity >= 3, q >= 2 and no monochromatic path of n
// vertices. The output on 2^N vertices has no monochromatic path of n + 3.
StepUpKColoring stepup_k_source(const OrderedColoring& psi, int n);
OrderedColoring stepup_k_witness(const OrderedColoring& psi, int n);

struct SparseAdversary {
    GraphColoring coloring;
    std::vector<Vertex> v1;          // outside the t-core
    std::vector<Vertex> v2;          // the t-core
    std::vector<Vertex> v1_classes;  // proper coloring of V1, per vertex (0 on V2)
    std::size_t t = 0;
    bool within_edge_budget = false; // |E| < t * N_2(q, n2) / 2
};

// Colors g with no monochromatic monotone path of n1 + n2 - 1 vertices.
// phi must be walk-free at level n1; t = phi.N plays the role of f(q,n1)-1.
// Throws PreconditionError if the t-core has N_2(q, n2) or more vertices.
SparseAdversary sparse_adversary_coloring(const OrderedGraph& g, int q, int n1, int n2,
                                          const DigraphColoring& phi);
// Same, with phi found by exhaustive search (tiny n1 only).
SparseAdversary sparse_adversary_coloring(const OrderedGraph& g, int q, int n1, int n2);

} // namespace monopath
