#include "monopath/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>

namespace monopath {

DigraphColoring::DigraphColoring(int q, Vertex n, Color fill)
    : q_(q), n_(n), colors_(static_cast<std::size_t>(n) * (n == 0 ? 0 : n - 1), fill) {
    if (q < 1) {
        throw std::invalid_argument("digraph coloring: need at least one color");
    }
}

DigraphColoring::DigraphColoring(int q, Vertex n, std::vector<Color> colors)
    : q_(q), n_(n), colors_(std::move(colors)) {
    if (q < 1) {
        throw std::invalid_argument("digraph coloring: need at least one color");
    }
    const std::size_t expected = static_cast<std::size_t>(n) * (n == 0 ? 0 : n - 1);
    if (colors_.size() != expected) {
        throw std::invalid_argument("digraph coloring: wrong count: expected " +
                                    std::to_string(expected) + ", got " +
                                    std::to_string(colors_.size()));
    }
    for (Color c : colors_) {
        if (c < 1 || c > q) {
            throw std::invalid_argument("digraph coloring: color out of range");
        }
    }
}

bool WalkLengths::walk_free(std::size_t n) const {
    return std::all_of(per_color.begin(), per_color.end(),
                       [n](const auto& len) { return len && *len < n; });
}

WalkLengths longest_mono_walks(const DigraphColoring& d) {
    const Vertex n = d.num_vertices();
    WalkLengths out;
    for (int c = 1; c <= d.num_colors(); ++c) {
        // Kahn's algorithm: a leftover vertex means a cycle; otherwise the
        // topological order carries the longest-path DP.
        std::vector<std::vector<Vertex>> succ(n + 1);
        std::vector<std::size_t> indeg(n + 1, 0);
        for (Vertex a = 1; a <= n; ++a) {
            for (Vertex b = 1; b <= n; ++b) {
                if (a != b && d.color(a, b) == c) {
                    succ[a].push_back(b);
                    ++indeg[b];
                }
            }
        }
        std::vector<std::size_t> len(n + 1, 1);
        std::queue<Vertex> ready;
        for (Vertex v = 1; v <= n; ++v) {
            if (indeg[v] == 0) {
                ready.push(v);
            }
        }
        std::size_t seen = 0;
        std::size_t best = n == 0 ? 0 : 1;
        while (!ready.empty()) {
            const Vertex v = ready.front();
            ready.pop();
            ++seen;
            best = std::max(best, len[v]);
            for (Vertex w : succ[v]) {
                len[w] = std::max(len[w], len[v] + 1);
                if (--indeg[w] == 0) {
                    ready.push(w);
                }
            }
        }
        if (seen < n) {
            out.per_color.emplace_back(std::nullopt);
        } else {
            out.per_color.emplace_back(best);
        }
    }
    return out;
}

std::vector<int> lowf_point(int q, int n, Vertex id) {
    std::vector<int> p(static_cast<std::size_t>(q - 1));
    Vertex r = id - 1;
    for (auto& x : p) {
        x = static_cast<int>(r % static_cast<Vertex>(n)) + 1;
        r /= static_cast<Vertex>(n);
    }
    return p;
}

DigraphColoring lowf_witness(int q, int n) {
    if (q < 2 || n < 1) {
        throw std::invalid_argument("lowf_witness: need q >= 2 and n >= 1");
    }
    Vertex size = 1;
    for (int i = 0; i < q - 1; ++i) {
        size *= static_cast<Vertex>(n);
    }
    std::vector<std::vector<int>> pts(size + 1);
    for (Vertex v = 1; v <= size; ++v) {
        pts[v] = lowf_point(q, n, v);
    }
    DigraphColoring d(q, size, static_cast<Color>(q));
    for (Vertex a = 1; a <= size; ++a) {
        for (Vertex b = 1; b <= size; ++b) {
            if (a == b) {
                continue;
            }
            for (int i = 0; i < q - 1; ++i) {
                if (pts[a][static_cast<std::size_t>(i)] < pts[b][static_cast<std::size_t>(i)]) {
                    d.set(a, b, static_cast<Color>(i + 1));
                    break;
                }
            }
        }
    }
    return d;
}

namespace {

// Backtracking state: per color, the arcs placed so far.
class WalkFreeSearch {
public:
    WalkFreeSearch(int q, int n, Vertex N, const SearchBudget& budget)
        : q_(q), n_(static_cast<std::size_t>(n)), N_(N), meter_(budget), d_(q, N),
          succ_(static_cast<std::size_t>(q), std::vector<std::vector<Vertex>>(N + 1)),
          pred_(static_cast<std::size_t>(q), std::vector<std::vector<Vertex>>(N + 1)) {
        for (Vertex a = 1; a <= N; ++a) {
            for (Vertex b = 1; b <= N; ++b) {
                if (a != b) {
                    arcs_.emplace_back(a, b);
                }
            }
        }
    }

    Outcome run() {
        if (n_ <= 1) {
            // every vertex is already a walk of one vertex
            return N_ == 0 ? Outcome::Found : Outcome::None;
        }
        return extend(0);
    }
    const DigraphColoring& coloring() const { return d_; }
    std::uint64_t nodes() const { return meter_.nodes(); }

private:
    // vertices on the longest path from v in one color class (acyclic)
    std::size_t longest(const std::vector<std::vector<Vertex>>& adj, Vertex v,
                        std::vector<std::size_t>& memo) {
        if (memo[v] != 0) {
            return memo[v];
        }
        std::size_t best = 1;
        for (Vertex w : adj[v]) {
            best = std::max(best, 1 + longest(adj, w, memo));
        }
        return memo[v] = best;
    }

    bool reaches(const std::vector<std::vector<Vertex>>& adj, Vertex from, Vertex to) {
        std::vector<Vertex> stack{from};
        std::vector<bool> seen(N_ + 1, false);
        seen[from] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (v == to) {
                return true;
            }
            for (Vertex w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return false;
    }

    bool admissible(Vertex a, Vertex b, int c) {
        auto& succ = succ_[static_cast<std::size_t>(c - 1)];
        auto& pred = pred_[static_cast<std::size_t>(c - 1)];
        if (reaches(succ, b, a)) {
            return false;
        }
        std::vector<std::size_t> memo_in(N_ + 1, 0), memo_out(N_ + 1, 0);
        return longest(pred, a, memo_in) + longest(succ, b, memo_out) < n_;
    }

    Outcome extend(std::size_t i) {
        if (!meter_.tick()) {
            return Outcome::BudgetExhausted;
        }
        if (i == arcs_.size()) {
            return Outcome::Found;
        }
        const auto [a, b] = arcs_[i];
        const int top = (i == 0) ? 1 : q_; // color symmetry
        for (int c = 1; c <= top; ++c) {
            if (!admissible(a, b, c)) {
                continue;
            }
            auto& succ = succ_[static_cast<std::size_t>(c - 1)];
            auto& pred = pred_[static_cast<std::size_t>(c - 1)];
            succ[a].push_back(b);
            pred[b].push_back(a);
            d_.set(a, b, static_cast<Color>(c));
            const Outcome r = extend(i + 1);
            if (r != Outcome::None) {
                return r;
            }
            succ[a].pop_back();
            pred[b].pop_back();
        }
        return Outcome::None;
    }

    int q_;
    std::size_t n_;
    Vertex N_;
    BudgetMeter meter_;
    DigraphColoring d_;
    std::vector<Edge> arcs_;
    std::vector<std::vector<std::vector<Vertex>>> succ_;
    std::vector<std::vector<std::vector<Vertex>>> pred_;
};

} // namespace

SearchResult<DigraphColoring> find_walk_free(int q, int n, Vertex N, SearchBudget budget) {
    if (q < 1 || n < 1) {
        throw std::invalid_argument("find_walk_free: need q >= 1 and n >= 1");
    }
    WalkFreeSearch s(q, n, N, budget);
    SearchResult<DigraphColoring> r;
    r.outcome = s.run();
    r.nodes = s.nodes();
    if (r.outcome == Outcome::Found) {
        r.witness = s.coloring();
    }
    return r;
}

WalkFreeResult largest_walk_free(int q, int n, Vertex cap, SearchBudget budget) {
    WalkFreeResult out{0, DigraphColoring(q, 0)};
    for (Vertex N = 0; N <= cap; ++N) {
        auto r = find_walk_free(q, n, N, budget);
        if (r.outcome == Outcome::BudgetExhausted) {
            throw BudgetExhausted();
        }
        if (r.outcome == Outcome::None) {
            out.f = N;
            return out;
        }
        out.witness = std::move(*r.witness);
    }
    throw CapExceeded("f(" + std::to_string(q) + "," + std::to_string(n) + ") exceeds cap " +
                      std::to_string(cap));
}

Vertex f_exact(int q, int n, Vertex cap, SearchBudget budget) {
    return largest_walk_free(q, n, cap, budget).f;
}

GraphColoring lift_digraph_to_graph(const DigraphColoring& d, const OrderedGraph& g,
                                    const std::vector<Vertex>& parts) {
    if (parts.size() != g.num_vertices()) {
        throw std::invalid_argument("lift: need one class per vertex");
    }
    for (Vertex p : parts) {
        if (p < 1 || p > d.num_vertices()) {
            throw std::invalid_argument("lift: class id outside the digraph's vertices");
        }
    }
    GraphColoring out{g, d.num_colors(), {}};
    out.colors.reserve(g.num_edges());
    for (auto [v, w] : g.edges()) {
        const Vertex i = parts[v - 1];
        const Vertex j = parts[w - 1];
        if (i == j) {
            throw std::invalid_argument("lift: parts not proper, edge (" + std::to_string(v) + "," +
                                        std::to_string(w) + ") inside class " + std::to_string(i));
        }
        out.colors.push_back(d.color(i, j));
    }
    return out;
}

DigraphColoring read_digraph(std::istream& in) {
    std::vector<long long> vals;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
            }
            if (pos == line.size()) {
                break;
            }
            std::size_t used = 0;
            try {
                vals.push_back(std::stoll(line.substr(pos), &used));
            } catch (const std::exception&) {
                throw FormatError("malformed digraph token near '" + line.substr(pos, 10) + "'");
            }
            pos += used;
        }
    }
    if (vals.size() < 2 || vals[0] < 1 || vals[0] > 65535 || vals[1] < 0) {
        throw FormatError("malformed header: expected 'q N'");
    }
    std::vector<Color> colors;
    for (std::size_t i = 2; i < vals.size(); ++i) {
        if (vals[i] < 1 || vals[i] > vals[0]) {
            throw FormatError("color out of range: " + std::to_string(vals[i]));
        }
        colors.push_back(static_cast<Color>(vals[i]));
    }
    try {
        return DigraphColoring(static_cast<int>(vals[0]), static_cast<Vertex>(vals[1]), std::move(colors));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

void write_digraph(const DigraphColoring& d, std::ostream& out) {
    out << d.num_colors() << ' ' << d.num_vertices() << '\n';
    const Vertex n = d.num_vertices();
    for (Vertex a = 1; a <= n; ++a) {
        bool first = true;
        for (Vertex b = 1; b <= n; ++b) {
            if (a == b) {
                continue;
            }
            out << (first ? "" : " ") << d.color(a, b);
            first = false;
        }
        if (n > 1) {
            out << '\n';
        }
    }
}

} // namespace monopath
