#include "monopath/longest_path.hpp"

namespace monopath {

LengthTable::LengthTable(int k, int q, Vertex n, bool with_back_pointers)
    : k_(k), q_(q), n_(n) {
    tuples_ = (n >= static_cast<Vertex>(k - 1)) ? binomial(n, static_cast<std::uint64_t>(k - 1)) : 0;
    len_.assign(tuples_ * static_cast<std::uint64_t>(q), static_cast<std::uint16_t>(k - 1));
    if (with_back_pointers) {
        back_.assign(tuples_ * static_cast<std::uint64_t>(q), 0);
    }
}

MonotonePath LengthTable::path_ending_with(std::uint64_t tuple_rank, Color c) const {
    if (back_.empty()) {
        throw std::logic_error("path_ending_with: table has no back-pointers");
    }
    const auto q = static_cast<std::uint64_t>(q_);
    std::vector<Vertex> tuple = colex_unrank(tuple_rank, k_ - 1);
    // collected back to front
    std::vector<Vertex> rev(tuple.rbegin(), tuple.rend());
    std::uint64_t rank = tuple_rank;
    while (Vertex a = back_[rank * q + (c - 1)]) {
        rev.push_back(a);
        tuple.pop_back();
        tuple.insert(tuple.begin(), a);
        rank = colex_rank(tuple);
    }
    return MonotonePath{std::vector<Vertex>(rev.rbegin(), rev.rend()), c};
}

std::uint16_t MonoPaths::longest() const {
    std::uint16_t best = 0;
    for (const auto& b : per_color) {
        best = std::max(best, b.max_length);
    }
    return best;
}

Color MonoPaths::longest_color() const {
    Color best = 1;
    for (std::size_t i = 1; i < per_color.size(); ++i) {
        if (per_color[i].max_length > per_color[best - 1].max_length) {
            best = static_cast<Color>(i + 1);
        }
    }
    return best;
}

} // namespace monopath
