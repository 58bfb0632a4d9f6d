#include "monopath/path_finder.hpp"

#include <algorithm>

namespace monopath {

std::optional<std::uint64_t> recursive_threshold(int k, int q, int n) {
    if (k < 2 || q < 1 || n < 1) {
        throw std::invalid_argument("recursive_threshold: need k >= 2, q >= 1, n >= 1");
    }
    if (n < k || q == 1) {
        return static_cast<std::uint64_t>(n);
    }
    try {
        if (k == 2) {
            return checked_pow(static_cast<std::uint64_t>(n - 1), static_cast<unsigned>(q)) + 1;
        }
        const auto colors = checked_pow(static_cast<std::uint64_t>(n - k + 1), static_cast<unsigned>(q - 1));
        if (colors > 0x7fffffff) {
            return std::nullopt;
        }
        return recursive_threshold(k - 1, static_cast<int>(colors), n);
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

namespace {

MonotonePath first_vertices(MonotonePath p, std::size_t n) {
    p.vertices.resize(n);
    return p;
}

std::optional<MonotonePath> find_rec(const OrderedColoring& c, int n) {
    const int k = c.uniformity();
    const int q = c.num_colors();
    const auto paths = longest_mono_paths(c);
    // graphs and single colors: the DP is the whole answer
    const int direct = (k == 2 || q == 1) ? q : q - 1;
    for (int col = 1; col <= direct; ++col) {
        const auto& best = paths.best(static_cast<Color>(col));
        if (best.max_length >= n) {
            return first_vertices(best.witness, static_cast<std::size_t>(n));
        }
    }
    if (direct == q) {
        return std::nullopt;
    }
    if (c.num_vertices() < static_cast<Vertex>(k - 1)) {
        return std::nullopt;
    }

    // label each (k-1)-tuple by its path lengths in colors 1..q-1
    const auto side = static_cast<std::uint64_t>(n - k + 1);
    const auto label_count = checked_pow(side, static_cast<unsigned>(q - 1));
    if (label_count > 65535) {
        throw std::invalid_argument("find_path_recursive: more than 65535 labels one level down");
    }
    const auto& table = paths.table;
    std::vector<Color> labels(table.num_tuples());
    for (std::uint64_t t = 0; t < table.num_tuples(); ++t) {
        std::uint64_t code = 0;
        for (int col = q - 1; col >= 1; --col) {
            code = code * side + (table.length(t, static_cast<Color>(col)) - static_cast<std::uint64_t>(k - 1));
        }
        labels[t] = static_cast<Color>(code + 1);
    }
    const OrderedColoring phi(k - 1, static_cast<int>(label_count), c.num_vertices(), std::move(labels));
    auto sub = find_rec(phi, n);
    if (!sub) {
        return std::nullopt;
    }
    // consecutive tuples with equal labels force every edge into color q
    MonotonePath p{sub->vertices, static_cast<Color>(q)};
    if (!verify_path(c, p)) {
        throw std::logic_error("find_path_recursive: label-monochromatic path is not color q");
    }
    return p;
}

} // namespace

MonotonePath find_path_recursive(const OrderedColoring& c, int n, ThresholdPolicy policy) {
    if (n < 1) {
        throw std::invalid_argument("find_path_recursive: need n >= 1");
    }
    if (policy == ThresholdPolicy::Enforce) {
        const auto th = recursive_threshold(c.uniformity(), c.num_colors(), n);
        if (!th || c.num_vertices() < *th) {
            throw BelowThreshold("find_path_recursive: N = " + std::to_string(c.num_vertices()) +
                                 " is below the guaranteed size " +
                                 (th ? std::to_string(*th) : std::string("(beyond 64 bits)")));
        }
    }
    auto p = find_rec(c, n);
    if (!p || !verify_path(c, *p) || p->length() != static_cast<std::size_t>(n)) {
        throw NotFound("find_path_recursive: no monochromatic path of " + std::to_string(n) + " vertices");
    }
    return *p;
}

ColorOracle random_oracle(int q, std::uint64_t seed) {
    return [q, seed](std::span<const Vertex> e) {
        std::uint64_t h = splitmix64(seed);
        for (Vertex v : e) {
            h = splitmix64(h ^ v);
        }
        return static_cast<Color>(h % static_cast<std::uint64_t>(q) + 1);
    };
}

bool ReductionResult::survivor_bound_holds() const {
    const auto q = static_cast<std::uint64_t>(game.q);
    for (const auto& s : stages) {
        // |S_t| * q^m >= |S_{t-1}| - 1, without overflow for large m
        std::uint64_t lhs = s.after;
        for (std::size_t i = 0; i < s.edges && lhs < s.before; ++i) {
            lhs *= q;
        }
        if (lhs + 1 < s.before) {
            return false;
        }
    }
    return true;
}

ReductionResult find_path_online_reduction(const ColorOracle& chi, int k, int q, int n, Vertex N,
                                           OnlineBuilder& builder) {
    if (k < 3 || q < 1 || n < k) {
        throw std::invalid_argument("online reduction: need k >= 3, q >= 1, n >= k");
    }
    const int target = n + k - 2;
    OnlineBoard aux(k - 1, q, target);
    ReductionResult out;
    std::vector<Vertex> survivors(N);
    for (Vertex v = 1; v <= N; ++v) {
        survivors[v - 1] = v;
    }
    std::vector<Vertex> edge;
    std::vector<std::size_t> count(static_cast<std::size_t>(q) + 1);
    while (true) {
        if (survivors.empty()) {
            throw SurvivorsExhausted("online reduction: no survivors left at stage " +
                                     std::to_string(out.chosen.size() + 1) + " (N too small)");
        }
        ReductionStage st;
        st.before = survivors.size();
        st.vertex = survivors.front();
        survivors.erase(survivors.begin());
        out.chosen.push_back(st.vertex);
        st.stage = out.chosen.size();
        aux.begin_stage();
        builder.begin_stage(aux);
        while (!aux.has_path()) {
            const auto prefix = builder.next_edge(aux);
            if (!prefix) {
                break;
            }
            edge.clear();
            for (Vertex i : *prefix) {
                if (i < 1 || i >= st.stage) {
                    throw StrategyError("builder: illegal edge prefix at stage " + std::to_string(st.stage));
                }
                edge.push_back(out.chosen[i - 1]);
            }
            edge.push_back(st.vertex);
            // majority color of edge + {w} over the survivors w
            std::fill(count.begin(), count.end(), 0);
            edge.push_back(0);
            for (Vertex w : survivors) {
                edge.back() = w;
                ++count[chi(edge)];
            }
            edge.pop_back();
            Color r = 1;
            for (int c = 2; c <= q; ++c) {
                if (count[static_cast<std::size_t>(c)] > count[r]) {
                    r = static_cast<Color>(c);
                }
            }
            std::vector<Vertex> kept;
            kept.reserve(count[r]);
            edge.push_back(0);
            for (Vertex w : survivors) {
                edge.back() = w;
                if (chi(edge) == r) {
                    kept.push_back(w);
                }
            }
            edge.pop_back();
            survivors = std::move(kept);
            aux.draw(*prefix, r);
            out.records.push_back({st.stage, edge, r, survivors.size()});
            ++st.edges;
        }
        if (st.stage >= static_cast<std::size_t>(k - 1) && st.edges == 0 && !aux.has_path()) {
            throw StrategyError("builder: modified game requires an edge at stage " + std::to_string(st.stage));
        }
        st.after = survivors.size();
        out.stages.push_back(st);
        if (aux.has_path()) {
            break;
        }
    }
    out.game = GameTranscript{k - 1, q, target, true, aux.stages(), aux.path()};
    // the last n vertices of the auxiliary path each close an auxiliary edge
    const auto& av = out.game.path.vertices;
    out.path.color = out.game.path.color;
    for (std::size_t i = av.size() - static_cast<std::size_t>(n); i < av.size(); ++i) {
        out.path.vertices.push_back(out.chosen[av[i] - 1]);
    }
    const auto kk = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i + kk <= out.path.vertices.size(); ++i) {
        std::span<const Vertex> w(out.path.vertices.data() + i, kk);
        if (chi(w) != out.path.color) {
            throw std::logic_error("online reduction: extracted path is not monochromatic");
        }
    }
    return out;
}

} // namespace monopath
