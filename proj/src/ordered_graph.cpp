#include "monopath/ordered_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace monopath {

OrderedGraph::OrderedGraph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& [a, b] : edges_) {
        if (a == b) {
            throw std::invalid_argument("ordered graph: loop at vertex " + std::to_string(a));
        }
        if (a > b) {
            std::swap(a, b);
        }
        if (a < 1 || b > n) {
            throw std::invalid_argument("ordered graph: vertex outside [N]");
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
        return x.second != y.second ? x.second < y.second : x.first < y.first;
    });
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

OrderedGraph OrderedGraph::complete(Vertex n) {
    std::vector<Edge> e;
    for (Vertex b = 2; b <= n; ++b) {
        for (Vertex a = 1; a < b; ++a) {
            e.emplace_back(a, b);
        }
    }
    return OrderedGraph(n, std::move(e));
}

OrderedGraph OrderedGraph::path(Vertex n) {
    std::vector<Edge> e;
    for (Vertex b = 2; b <= n; ++b) {
        e.emplace_back(b - 1, b);
    }
    return OrderedGraph(n, std::move(e));
}

std::vector<std::vector<Vertex>> OrderedGraph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(n_ + 1);
    for (auto [a, b] : edges_) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
    }
    return adj;
}

std::size_t GraphPaths::longest() const {
    std::size_t best = 0;
    for (auto m : max_length) {
        best = std::max(best, m);
    }
    return best;
}

GraphPaths longest_mono_paths(const GraphColoring& c) {
    const Vertex n = c.graph.num_vertices();
    const auto q = static_cast<std::size_t>(c.q);
    if (c.colors.size() != c.graph.num_edges()) {
        throw std::invalid_argument("graph coloring: one color per edge required");
    }
    // len[v * q + c - 1]: longest path of color c ending at v
    std::vector<std::size_t> len((n + 1) * q, 1);
    std::vector<Vertex> back((n + 1) * q, 0);
    const auto& edges = c.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        const std::size_t col = c.colors[i] - 1u;
        if (len[a * q + col] + 1 > len[b * q + col]) {
            len[b * q + col] = len[a * q + col] + 1;
            back[b * q + col] = a;
        }
    }
    GraphPaths out;
    out.max_length.assign(q, n == 0 ? 0 : 1);
    out.witness.resize(q);
    for (std::size_t col = 0; col < q; ++col) {
        Vertex end = n == 0 ? 0 : 1;
        for (Vertex v = 1; v <= n; ++v) {
            if (len[v * q + col] > out.max_length[col]) {
                out.max_length[col] = len[v * q + col];
                end = v;
            }
        }
        MonotonePath& p = out.witness[col];
        p.color = static_cast<Color>(col + 1);
        for (Vertex v = end; v != 0; v = back[v * q + col]) {
            p.vertices.push_back(v);
        }
        std::reverse(p.vertices.begin(), p.vertices.end());
    }
    return out;
}

OrderedColoring to_dense(const GraphColoring& c) {
    const Vertex n = c.graph.num_vertices();
    if (c.graph.num_edges() != binomial(n, 2)) {
        throw std::invalid_argument("to_dense: graph is not complete");
    }
    // edges sorted by (b, a) is exactly colex order
    return OrderedColoring(2, c.q, n, c.colors);
}

GraphColoring from_dense(const OrderedColoring& c) {
    if (c.uniformity() != 2) {
        throw std::invalid_argument("from_dense: need a graph coloring (k = 2)");
    }
    auto colors = c.colors();
    return GraphColoring{OrderedGraph::complete(c.num_vertices()), c.num_colors(),
                         std::vector<Color>(colors.begin(), colors.end())};
}

CoreDecomposition t_core(const OrderedGraph& g, std::size_t t) {
    const Vertex n = g.num_vertices();
    auto adj = g.adjacency();
    std::vector<std::size_t> deg(n + 1);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v = 1; v <= n; ++v) {
        deg[v] = adj[v].size();
        queue.emplace(deg[v], v);
    }
    std::vector<bool> removed(n + 1, false);
    CoreDecomposition out;
    while (!queue.empty() && queue.begin()->first < t) {
        const Vertex v = queue.begin()->second;
        queue.erase(queue.begin());
        removed[v] = true;
        out.deletion_order.push_back(v);
        for (Vertex w : adj[v]) {
            if (!removed[w]) {
                queue.erase({deg[w], w});
                --deg[w];
                queue.emplace(deg[w], w);
            }
        }
    }
    for (Vertex v = 1; v <= n; ++v) {
        if (!removed[v]) {
            out.core.push_back(v);
        }
    }
    return out;
}

} // namespace monopath
