#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace monopath {

// Vertices are 1-based ids 1..N throughout.
using Vertex = std::uint32_t;
// Colors are 1-based ids 1..q; 0 never denotes a valid color.
using Color = std::uint16_t;

// C(n, k), throws std::overflow_error if the value does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// base^exp, throws std::overflow_error past 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

// Pascal table for hot loops: C(a, b) for a <= max_n, b <= max_k.
// Entries that overflow 64 bits saturate.
class BinomialTable {
public:
    BinomialTable(std::uint64_t max_n, int max_k);

    std::uint64_t operator()(std::uint64_t a, int b) const {
        return table_[a * stride_ + static_cast<std::size_t>(b)];
    }

private:
    std::size_t stride_;
    std::vector<std::uint64_t> table_;
};

// Colex rank of a strictly increasing subset of 1-based vertices:
// sum over i of C(s_i - 1, i). Throws std::invalid_argument if the subset
// is not strictly increasing or contains 0.
std::uint64_t colex_rank(std::span<const Vertex> subset);

// Inverse of colex_rank for k-subsets.
std::vector<Vertex> colex_unrank(std::uint64_t rank, int k);

// {1, ..., k}
std::vector<Vertex> first_subset(int k);

// Steps a k-subset of [n] to its colex successor in place. Returns false
// (leaving the subset unspecified) when it was the last one.
bool next_colex(std::span<Vertex> subset, Vertex n);

bool strictly_increasing(std::span<const Vertex> seq);

} // namespace monopath
