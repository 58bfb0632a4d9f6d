#include "monopath/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace monopath {

OrderedColoring::OrderedColoring(int k, int q, Vertex n, std::vector<Color> colors)
    : k_(k), q_(q), n_(n), colors_(std::move(colors)) {
    if (k < 2) {
        throw std::invalid_argument("uniformity must be at least 2");
    }
    if (q < 1) {
        throw std::invalid_argument("need at least one color");
    }
    const std::uint64_t expected = binomial(n, static_cast<std::uint64_t>(k));
    if (colors_.size() != expected) {
        throw std::invalid_argument("wrong count: expected " + std::to_string(expected) +
                                    " colors, got " + std::to_string(colors_.size()));
    }
    for (Color c : colors_) {
        if (c < 1 || c > q) {
            throw std::invalid_argument("color out of range: " + std::to_string(c));
        }
    }
}

OrderedColoring OrderedColoring::uniform(int k, int q, Vertex n, Color c) {
    std::vector<Color> colors(binomial(n, static_cast<std::uint64_t>(k)), c);
    return OrderedColoring(k, q, n, std::move(colors));
}

Color OrderedColoring::color(std::span<const Vertex> edge) const {
    if (edge.size() != static_cast<std::size_t>(k_)) {
        throw std::invalid_argument("edge has wrong size");
    }
    if (edge.back() > n_) {
        throw std::out_of_range("edge vertex exceeds N");
    }
    return colors_[colex_rank(edge)];
}

void OrderedColoring::colors_ending_with(std::span<const Vertex> suffix,
                                         std::span<Color> out) const {
    std::uint64_t base = 0;
    for (std::size_t i = 0; i < suffix.size(); ++i) {
        base += binomial(suffix[i] - 1, i + 2);
    }
    const std::size_t count = suffix[0] - 1;
    std::copy_n(colors_.begin() + static_cast<std::ptrdiff_t>(base), count, out.begin());
}

OrderedColoring OrderedColoring::induced_prefix(Vertex m) const {
    if (m > n_) {
        throw std::invalid_argument("induced_prefix beyond N");
    }
    const auto count = binomial(m, static_cast<std::uint64_t>(k_));
    return OrderedColoring(k_, q_, m, std::vector<Color>(colors_.begin(),
                                                         colors_.begin() + static_cast<std::ptrdiff_t>(count)));
}

void FunctionColoring::colors_ending_with(std::span<const Vertex> suffix,
                                          std::span<Color> out) const {
    std::vector<Vertex> edge(suffix.size() + 1);
    std::copy(suffix.begin(), suffix.end(), edge.begin() + 1);
    for (Vertex a = 1; a < suffix[0]; ++a) {
        edge[0] = a;
        out[a - 1] = fn_(edge);
    }
}

namespace {

// next non-comment token; comments run from '#' to end of line
bool next_token(std::istream& in, std::string& tok) {
    tok.clear();
    char ch;
    while (in.get(ch)) {
        if (ch == '#') {
            std::string rest;
            std::getline(in, rest);
            if (!tok.empty()) {
                return true;
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!tok.empty()) {
                return true;
            }
            continue;
        }
        tok.push_back(ch);
    }
    return !tok.empty();
}

long long parse_int(const std::string& tok, const char* what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw FormatError(std::string("malformed ") + what + ": '" + tok + "'");
    }
    if (used != tok.size()) {
        throw FormatError(std::string("malformed ") + what + ": '" + tok + "'");
    }
    return v;
}

} // namespace

OrderedColoring read_coloring(std::istream& in) {
    std::string tok;
    long long header[3];
    const char* names[3] = {"header (k)", "header (q)", "header (N)"};
    for (int i = 0; i < 3; ++i) {
        if (!next_token(in, tok)) {
            throw FormatError("malformed header: expected 'k q N'");
        }
        header[i] = parse_int(tok, names[i]);
    }
    const long long k = header[0], q = header[1], n = header[2];
    if (k < 2 || q < 1 || q > 65535 || n < 0 || n > 0xffffffffLL) {
        throw FormatError("malformed header: out-of-range k, q or N");
    }
    const std::uint64_t expected = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    std::vector<Color> colors;
    colors.reserve(expected);
    while (next_token(in, tok)) {
        long long c = parse_int(tok, "color");
        if (c < 1 || c > q) {
            throw FormatError("color out of range: " + tok);
        }
        colors.push_back(static_cast<Color>(c));
    }
    if (colors.size() != expected) {
        throw FormatError("wrong count: expected " + std::to_string(expected) + " colors, got " +
                          std::to_string(colors.size()));
    }
    return OrderedColoring(static_cast<int>(k), static_cast<int>(q), static_cast<Vertex>(n),
                           std::move(colors));
}

void write_coloring(const OrderedColoring& c, std::ostream& out) {
    out << c.uniformity() << ' ' << c.num_colors() << ' ' << c.num_vertices() << '\n';
    const auto k = static_cast<std::uint64_t>(c.uniformity());
    std::uint64_t pos = 0;
    for (Vertex v = static_cast<Vertex>(k); v <= c.num_vertices(); ++v) {
        // edges whose largest vertex is v
        const std::uint64_t group = binomial(v - 1, k - 1);
        for (std::uint64_t i = 0; i < group; ++i) {
            if (i > 0) {
                out << ' ';
            }
            out << c.colors()[pos++];
        }
        out << '\n';
    }
}

std::string to_string(const OrderedColoring& c) {
    std::ostringstream os;
    write_coloring(c, os);
    return os.str();
}

std::string format_path(const MonotonePath& p) {
    std::ostringstream os;
    os << "color " << p.color << " vertices";
    for (Vertex v : p.vertices) {
        os << ' ' << v;
    }
    return os.str();
}

} // namespace monopath
