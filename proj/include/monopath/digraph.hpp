#pragma once

#include "monopath/ordered_graph.hpp"
#include "monopath/search_budget.hpp"

#include <optional>

namespace monopath {

// A q-coloring of the ordered pairs (a, b), a != b, of [N]; the complete
// digraph's arcs.
class DigraphColoring {
public:
    DigraphColoring() = default;
    DigraphColoring(int q, Vertex n, Color fill = 1);
    // Colors row-major by (a, b): a = 1..N, b != a ascending.
    DigraphColoring(int q, Vertex n, std::vector<Color> colors);

    int num_colors() const noexcept { return q_; }
    Vertex num_vertices() const noexcept { return n_; }
    Color color(Vertex a, Vertex b) const { return colors_[index(a, b)]; }
    void set(Vertex a, Vertex b, Color c) { colors_[index(a, b)] = c; }
    const std::vector<Color>& colors() const noexcept { return colors_; }

    // Row-major position of arc (a, b).
    std::size_t index(Vertex a, Vertex b) const {
        return static_cast<std::size_t>(a - 1) * (n_ - 1) + (b < a ? b - 1 : b - 2);
    }

    friend bool operator==(const DigraphColoring&, const DigraphColoring&) = default;

private:
    int q_ = 1;
    Vertex n_ = 0;
    std::vector<Color> colors_;
};

// Per color, the number of vertices of the longest monochromatic walk, or
// nullopt when the color class has a directed cycle (walks are unbounded).
struct WalkLengths {
    std::vector<std::optional<std::size_t>> per_color;

    bool unbounded(Color c) const { return !per_color.at(c - 1).has_value(); }
    // true iff every color's walks have fewer than n vertices
    bool walk_free(std::size_t n) const;
};

WalkLengths longest_mono_walks(const DigraphColoring& d);

// Vertices are the points of [n]^(q-1), numbered in colex order of their
// coordinate vectors (first coordinate varies fastest). Arc a -> b gets the
// smallest i with a_i < b_i, or q when there is none.
DigraphColoring lowf_witness(int q, int n);
std::vector<int> lowf_point(int q, int n, Vertex id);

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A coloring of the complete digraph on N vertices without a monochromatic
// walk of n vertices, found by backtracking over arcs in row-major order.
SearchResult<DigraphColoring> find_walk_free(int q, int n, Vertex N, SearchBudget budget = {});

struct WalkFreeResult {
    Vertex f = 0;              // least N forcing a monochromatic walk of n
    DigraphColoring witness;   // walk-free coloring on f - 1 vertices
};

// Throws CapExceeded when f(q, n) > cap, BudgetExhausted when the budget
// runs out first.
WalkFreeResult largest_walk_free(int q, int n, Vertex cap, SearchBudget budget = {});
Vertex f_exact(int q, int n, Vertex cap, SearchBudget budget = {});

// Edge (v, w), v < w, with v in class i and w in class j gets d.color(i, j).
// parts[v - 1] is the class of v, in [1, d.num_vertices()]. Throws
// std::invalid_argument if some edge joins two vertices of one class.
GraphColoring lift_digraph_to_graph(const DigraphColoring& d, const OrderedGraph& g,
                                    const std::vector<Vertex>& parts);

// Text format: "q N", then N(N-1) colors row-major. '#' comments allowed.
DigraphColoring read_digraph(std::istream& in);
void write_digraph(const DigraphColoring& d, std::ostream& out);

} // namespace monopath
