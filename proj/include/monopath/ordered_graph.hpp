#pragma once

#include "monopath/coloring.hpp"

#include <utility>

namespace monopath {

using Edge = std::pair<Vertex, Vertex>;

// A sparse ordered graph on [N]; edges stored as (a, b) with a < b, sorted
// by (b, a) so that a single pass visits them in increasing last vertex.
class OrderedGraph {
public:
    OrderedGraph() = default;
    // Accepts edges in any order and orientation; drops duplicates.
    // Throws std::invalid_argument on loops or vertices outside [N].
    OrderedGraph(Vertex n, std::vector<Edge> edges);

    static OrderedGraph complete(Vertex n);
    static OrderedGraph path(Vertex n);

    Vertex num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::vector<std::vector<Vertex>> adjacency() const;

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
};

// One color per edge of g, in g.edges() order.
struct GraphColoring {
    OrderedGraph graph;
    int q = 1;
    std::vector<Color> colors;
};

struct GraphPaths {
    std::vector<std::size_t> max_length; // per color, vertex count
    std::vector<MonotonePath> witness;   // per color
    std::size_t longest() const;
};

// Longest monochromatic monotone path per color along the edges of g.
GraphPaths longest_mono_paths(const GraphColoring& c);

// Complete graphs convert losslessly to and from the dense k = 2 table.
OrderedColoring to_dense(const GraphColoring& c);
GraphColoring from_dense(const OrderedColoring& c);

struct CoreDecomposition {
    std::vector<Vertex> core;           // ascending
    std::vector<Vertex> deletion_order; // vertices outside the core
};

// Repeatedly deletes a vertex of minimum degree while that degree is below
// t (ties go to the lowest id); what survives is the t-core.
CoreDecomposition t_core(const OrderedGraph& g, std::size_t t);

} // namespace monopath
