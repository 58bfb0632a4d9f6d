#pragma once

#include "monopath/coloring.hpp"

#include <algorithm>
#include <optional>

namespace monopath {

// For every (k-1)-tuple t of [N] and color c, the number of vertices of the
// longest monochromatic monotone path of color c whose last k-1 vertices are
// t. Any k-1 vertices count as a path of length k-1, so entries are >= k-1.
//
// Optional back-pointers store the first vertex of the predecessor tuple;
// among equally long predecessors the lexicographically smallest wins.
class LengthTable {
public:
    LengthTable() = default;
    LengthTable(int k, int q, Vertex n, bool with_back_pointers);

    int uniformity() const noexcept { return k_; }
    int num_colors() const noexcept { return q_; }
    Vertex num_vertices() const noexcept { return n_; }
    std::uint64_t num_tuples() const noexcept { return tuples_; }
    bool has_back_pointers() const noexcept { return !back_.empty(); }

    std::uint16_t length(std::uint64_t tuple_rank, Color c) const {
        return len_[tuple_rank * static_cast<std::uint64_t>(q_) + (c - 1)];
    }
    std::uint16_t length(std::span<const Vertex> tuple, Color c) const {
        return length(colex_rank(tuple), c);
    }

    // Requires back-pointers.
    MonotonePath path_ending_with(std::uint64_t tuple_rank, Color c) const;

    // raw storage, tuple-major: entry (t, c) at t * q + (c - 1)
    std::vector<std::uint16_t>& lengths() noexcept { return len_; }
    std::vector<Vertex>& back_pointers() noexcept { return back_; }

private:
    int k_ = 2;
    int q_ = 1;
    Vertex n_ = 0;
    std::uint64_t tuples_ = 0;
    std::vector<std::uint16_t> len_;
    std::vector<Vertex> back_;
};

struct ColorBest {
    std::uint16_t max_length = 0;
    // empty when the DP ran without back-pointers
    MonotonePath witness;
};

struct MonoPaths {
    LengthTable table;
    std::vector<ColorBest> per_color;

    const ColorBest& best(Color c) const { return per_color.at(c - 1); }
    std::uint16_t longest() const;
    // color with the longest path, lowest id on ties
    Color longest_color() const;
};

struct DpOptions {
    bool track_witness = true;
};

// Single pass over suffix tuples in colex order (which is increasing order
// of the last vertex): for each edge {a} + t, relax len[t] from len[prefix].
template <ColorSource S>
MonoPaths longest_mono_paths(const S& source, DpOptions opt = {}) {
    const int k = source.uniformity();
    const int q = source.num_colors();
    const Vertex n = source.num_vertices();
    if (k < 2 || q < 1) {
        throw std::invalid_argument("longest_mono_paths: need k >= 2 and q >= 1");
    }
    if (n > 65535) {
        throw std::invalid_argument("longest_mono_paths: at most 65535 vertices");
    }
    MonoPaths result{LengthTable(k, q, n, opt.track_witness), {}};
    result.per_color.resize(static_cast<std::size_t>(q));
    LengthTable& table = result.table;
    const auto uq = static_cast<std::uint64_t>(q);

    if (n < static_cast<Vertex>(k - 1)) {
        // no (k-1)-tuples: the whole vertex set is the only "path"
        for (int c = 1; c <= q; ++c) {
            auto& best = result.per_color[static_cast<std::size_t>(c - 1)];
            best.max_length = static_cast<std::uint16_t>(n);
            if (opt.track_witness) {
                best.witness.color = static_cast<Color>(c);
                for (Vertex v = 1; v <= n; ++v) {
                    best.witness.vertices.push_back(v);
                }
            }
        }
        return result;
    }

    std::uint16_t* len = table.lengths().data();
    Vertex* back = opt.track_witness ? table.back_pointers().data() : nullptr;
    const BinomialTable binom(n, k);

    std::vector<std::uint64_t> best_rank(static_cast<std::size_t>(q), 0);
    std::vector<std::uint16_t> best_len(static_cast<std::size_t>(q), static_cast<std::uint16_t>(k - 1));
    std::vector<std::uint16_t> cur(static_cast<std::size_t>(q));
    std::vector<Vertex> cur_back(static_cast<std::size_t>(q));
    std::vector<Color> block(n);

    std::vector<Vertex> t = first_subset(k - 1);
    std::uint64_t rank = 0;
    do {
        std::fill(cur.begin(), cur.end(), static_cast<std::uint16_t>(k - 1));
        std::fill(cur_back.begin(), cur_back.end(), 0);
        const Vertex first = t[0];
        if (first > 1) {
            // prefix (a, t[0..k-3]) has rank (a - 1) + pbase
            std::uint64_t pbase = 0;
            for (int i = 2; i <= k - 1; ++i) {
                pbase += binom(t[static_cast<std::size_t>(i - 2)] - 1, i);
            }
            std::span<Color> out(block.data(), first - 1);
            source.colors_ending_with(std::span<const Vertex>(t), out);
            const std::uint16_t* row = len + pbase * uq;
            if (back != nullptr) {
                for (Vertex a = 1; a < first; ++a) {
                    const Color c = out[a - 1];
                    const std::uint16_t cand =
                        static_cast<std::uint16_t>(row[(a - 1) * uq + (c - 1)] + 1);
                    if (cand > cur[c - 1]) {
                        cur[c - 1] = cand;
                        cur_back[c - 1] = a;
                    }
                }
            } else {
                // one branch-free pass per color keeps the loop free of a
                // store-to-load dependency through cur
                for (int c = 1; c <= q; ++c) {
                    std::uint16_t best = 0;
                    const std::uint16_t* col = row + (c - 1);
                    for (Vertex a = 1; a < first; ++a) {
                        const std::uint16_t v = out[a - 1] == c ? col[(a - 1) * uq] : 0;
                        best = std::max(best, v);
                    }
                    if (best > 0) {
                        cur[static_cast<std::size_t>(c - 1)] =
                            std::max(cur[static_cast<std::size_t>(c - 1)], static_cast<std::uint16_t>(best + 1));
                    }
                }
            }
        }
        for (int c = 0; c < q; ++c) {
            len[rank * uq + static_cast<std::uint64_t>(c)] = cur[static_cast<std::size_t>(c)];
            if (back != nullptr) {
                back[rank * uq + static_cast<std::uint64_t>(c)] = cur_back[static_cast<std::size_t>(c)];
            }
            if (cur[static_cast<std::size_t>(c)] > best_len[static_cast<std::size_t>(c)]) {
                best_len[static_cast<std::size_t>(c)] = cur[static_cast<std::size_t>(c)];
                best_rank[static_cast<std::size_t>(c)] = rank;
            }
        }
        ++rank;
    } while (next_colex(t, n));

    for (int c = 1; c <= q; ++c) {
        auto& best = result.per_color[static_cast<std::size_t>(c - 1)];
        best.max_length = best_len[static_cast<std::size_t>(c - 1)];
        if (opt.track_witness) {
            best.witness = table.path_ending_with(best_rank[static_cast<std::size_t>(c - 1)],
                                                  static_cast<Color>(c));
        }
    }
    return result;
}

// Largest path length over all colors, without back-pointers.
template <ColorSource S>
std::uint16_t longest_mono_path_length(const S& source) {
    return longest_mono_paths(source, DpOptions{.track_witness = false}).longest();
}

// A monochromatic monotone path of exactly n vertices if the DP finds one
// (the first n vertices of a longest path of the chosen color).
template <ColorSource S>
std::optional<MonotonePath> find_mono_path(const S& source, std::size_t n) {
    const MonoPaths paths = longest_mono_paths(source);
    for (int c = 1; c <= source.num_colors(); ++c) {
        const auto& best = paths.best(static_cast<Color>(c));
        if (best.max_length >= n) {
            MonotonePath p = best.witness;
            p.vertices.resize(n);
            return p;
        }
    }
    return std::nullopt;
}

} // namespace monopath
