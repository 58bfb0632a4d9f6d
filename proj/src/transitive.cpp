#include "monopath/transitive.hpp"

#include <deque>

namespace monopath {

namespace {

// calls f on every k-subset of `set` (size k+1), i.e. `set` minus one entry
template <class F>
void for_each_drop_one(const std::vector<Vertex>& set, F&& f) {
    std::vector<Vertex> sub(set.size() - 1);
    for (std::size_t skip = 0; skip < set.size(); ++skip) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (i != skip) {
                sub[w++] = set[i];
            }
        }
        f(sub);
    }
}

} // namespace

std::optional<TransitivityViolation> is_transitive(const OrderedColoring& c) {
    const int k = c.uniformity();
    if (c.num_vertices() < static_cast<Vertex>(k + 1)) {
        return std::nullopt;
    }
    std::vector<Vertex> tuple = first_subset(k + 1);
    do {
        std::span<const Vertex> t(tuple);
        const Color first = c.color(t.first(static_cast<std::size_t>(k)));
        if (first != c.color(t.subspan(1))) {
            continue;
        }
        std::optional<TransitivityViolation> bad;
        for_each_drop_one(tuple, [&](const std::vector<Vertex>& sub) {
            if (!bad && c.color(sub) != first) {
                bad = TransitivityViolation{tuple, first};
            }
        });
        if (bad) {
            return bad;
        }
    } while (next_colex(tuple, c.num_vertices()));
    return std::nullopt;
}

std::vector<std::vector<Vertex>> transitive_closure(int k, Vertex N,
                                                    const std::vector<std::vector<Vertex>>& edges) {
    if (k < 1) {
        throw std::invalid_argument("transitive_closure: need k >= 1");
    }
    const auto total = binomial(N, static_cast<std::uint64_t>(k));
    std::vector<bool> in(total, false);
    std::deque<std::vector<Vertex>> work;
    auto add = [&](const std::vector<Vertex>& e) {
        const auto r = colex_rank(e);
        if (!in[r]) {
            in[r] = true;
            work.push_back(e);
        }
    };
    for (const auto& e : edges) {
        if (e.size() != static_cast<std::size_t>(k) || !strictly_increasing(e) || e.front() < 1 || e.back() > N) {
            throw std::invalid_argument("transitive_closure: edge is not a k-subset of [N]");
        }
        add(e);
    }
    std::vector<Vertex> other(static_cast<std::size_t>(k));
    std::vector<Vertex> big(static_cast<std::size_t>(k + 1));
    auto fire = [&]() { for_each_drop_one(big, add); };
    while (!work.empty()) {
        const std::vector<Vertex> e = work.front();
        work.pop_front();
        // e as the first window: e + {x}, x > max e
        for (Vertex x = e.back() + 1; x <= N; ++x) {
            std::copy(e.begin() + 1, e.end(), other.begin());
            other.back() = x;
            if (in[colex_rank(other)]) {
                std::copy(e.begin(), e.end(), big.begin());
                big.back() = x;
                fire();
            }
        }
        // e as the second window: {x} + e, x < min e
        for (Vertex x = 1; x < e.front(); ++x) {
            other.front() = x;
            std::copy(e.begin(), e.end() - 1, other.begin() + 1);
            if (in[colex_rank(other)]) {
                big.front() = x;
                std::copy(e.begin(), e.end(), big.begin() + 1);
                fire();
            }
        }
    }
    std::vector<std::vector<Vertex>> out;
    for (std::uint64_t r = 0; r < total; ++r) {
        if (in[r]) {
            out.push_back(colex_unrank(r, k));
        }
    }
    return out;
}

bool is_monochromatic_clique(const OrderedColoring& c, const Clique& clique) {
    const auto k = static_cast<std::size_t>(c.uniformity());
    const auto& v = clique.vertices;
    if (!strictly_increasing(v) || (!v.empty() && (v.front() < 1 || v.back() > c.num_vertices()))) {
        return false;
    }
    if (v.size() < k) {
        return true;
    }
    // walk all k-subsets of v by index
    std::vector<Vertex> idx = first_subset(static_cast<int>(k));
    std::vector<Vertex> e(k);
    do {
        for (std::size_t i = 0; i < k; ++i) {
            e[i] = v[idx[i] - 1];
        }
        if (c.color(e) != clique.color) {
            return false;
        }
    } while (next_colex(idx, static_cast<Vertex>(v.size())));
    return true;
}

Clique extract_clique(const OrderedColoring& c, int n) {
    if (auto bad = is_transitive(c)) {
        throw std::invalid_argument("extract_clique: coloring is not transitive");
    }
    const auto path = find_mono_path(c, static_cast<std::size_t>(n));
    if (!path) {
        throw NoPathFound("extract_clique: no monochromatic path of " + std::to_string(n) + " vertices");
    }
    Clique out{path->vertices, path->color};
    if (!is_monochromatic_clique(c, out)) {
        throw std::logic_error("extract_clique: path in a transitive coloring is not a clique");
    }
    return out;
}

} // namespace monopath
