#pragma once

#include "monopath/combinatorics.hpp"

#include <concepts>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace monopath {

// Anything that can report the color of every k-subset of [N]. The block
// query fills out[a - 1] with the color of {a} + suffix for a < suffix[0];
// in colex order those edges are contiguous, which the path DP relies on.
template <class S>
concept ColorSource = requires(const S& s, std::span<const Vertex> edge, std::span<Color> out) {
    { s.uniformity() } -> std::convertible_to<int>;
    { s.num_colors() } -> std::convertible_to<int>;
    { s.num_vertices() } -> std::convertible_to<Vertex>;
    { s.color(edge) } -> std::convertible_to<Color>;
    s.colors_ending_with(edge, out);
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A q-coloring of all k-subsets of [N], stored as one color per subset in
// colex order.
class OrderedColoring {
public:
    OrderedColoring() = default;
    // Throws std::invalid_argument on a wrong count or an out-of-range color.
    OrderedColoring(int k, int q, Vertex n, std::vector<Color> colors);

    static OrderedColoring uniform(int k, int q, Vertex n, Color c = 1);

    // Fills the table by calling color_of(edge) for every k-subset in colex order.
    template <class F>
    static OrderedColoring from_function(int k, int q, Vertex n, F&& color_of);

    template <ColorSource S>
    static OrderedColoring materialize(const S& source);

    int uniformity() const noexcept { return k_; }
    int num_colors() const noexcept { return q_; }
    Vertex num_vertices() const noexcept { return n_; }
    std::uint64_t num_edges() const noexcept { return colors_.size(); }

    Color color(std::span<const Vertex> edge) const;
    Color color_at(std::uint64_t rank) const { return colors_.at(rank); }
    std::span<const Color> colors() const noexcept { return colors_; }
    void colors_ending_with(std::span<const Vertex> suffix, std::span<Color> out) const;

    // Restriction to the first m vertices; a colex prefix of the table.
    OrderedColoring induced_prefix(Vertex m) const;

    friend bool operator==(const OrderedColoring&, const OrderedColoring&) = default;

private:
    int k_ = 2;
    int q_ = 1;
    Vertex n_ = 0;
    std::vector<Color> colors_;
};

// An increasing vertex sequence and the color it claims. "Length" is the
// number of vertices.
struct MonotonePath {
    std::vector<Vertex> vertices;
    Color color = 0;

    std::size_t length() const noexcept { return vertices.size(); }
    friend bool operator==(const MonotonePath&, const MonotonePath&) = default;
};

// Wraps an arbitrary callable; for oracles too large to tabulate.
class FunctionColoring {
public:
    using Fn = std::function<Color(std::span<const Vertex>)>;

    FunctionColoring(int k, int q, Vertex n, Fn fn)
        : k_(k), q_(q), n_(n), fn_(std::move(fn)) {}

    int uniformity() const noexcept { return k_; }
    int num_colors() const noexcept { return q_; }
    Vertex num_vertices() const noexcept { return n_; }
    Color color(std::span<const Vertex> edge) const { return fn_(edge); }
    void colors_ending_with(std::span<const Vertex> suffix, std::span<Color> out) const;

private:
    int k_;
    int q_;
    Vertex n_;
    Fn fn_;
};

// True iff the path is strictly increasing inside [N] and every window of
// k consecutive vertices has the claimed color. Never throws.
template <ColorSource S>
bool verify_path(const S& c, const MonotonePath& p) {
    const auto k = static_cast<std::size_t>(c.uniformity());
    if (p.color < 1 || p.color > c.num_colors()) {
        return false;
    }
    if (!strictly_increasing(p.vertices)) {
        return false;
    }
    for (Vertex v : p.vertices) {
        if (v < 1 || v > c.num_vertices()) {
            return false;
        }
    }
    for (std::size_t i = 0; i + k <= p.vertices.size(); ++i) {
        std::span<const Vertex> window(p.vertices.data() + i, k);
        if (c.color(window) != p.color) {
            return false;
        }
    }
    return true;
}

// Text format: header "k q N", then C(N, k) colors in colex order. Lines
// starting with '#' are comments. The writer puts one line per last vertex.
OrderedColoring read_coloring(std::istream& in);
void write_coloring(const OrderedColoring& c, std::ostream& out);
std::string to_string(const OrderedColoring& c);

std::string format_path(const MonotonePath& p);

// ---------------------------------------------------------------------------

template <class F>
OrderedColoring OrderedColoring::from_function(int k, int q, Vertex n, F&& color_of) {
    std::vector<Color> colors;
    if (n >= static_cast<Vertex>(k)) {
        colors.reserve(binomial(n, static_cast<std::uint64_t>(k)));
        std::vector<Vertex> e = first_subset(k);
        do {
            colors.push_back(static_cast<Color>(color_of(std::span<const Vertex>(e))));
        } while (next_colex(e, n));
    }
    return OrderedColoring(k, q, n, std::move(colors));
}

template <ColorSource S>
OrderedColoring OrderedColoring::materialize(const S& source) {
    const int k = source.uniformity();
    const Vertex n = source.num_vertices();
    std::vector<Color> colors;
    if (n >= static_cast<Vertex>(k)) {
        colors.reserve(binomial(n, static_cast<std::uint64_t>(k)));
        // suffixes in colex order produce edge blocks in colex order
        std::vector<Vertex> suffix = first_subset(k - 1);
        for (auto& v : suffix) {
            ++v;
        }
        std::vector<Color> block;
        do {
            block.resize(suffix[0] - 1);
            source.colors_ending_with(suffix, block);
            colors.insert(colors.end(), block.begin(), block.end());
        } while (next_colex(suffix, n));
    }
    return OrderedColoring(k, source.num_colors(), n, std::move(colors));
}

} // namespace monopath
