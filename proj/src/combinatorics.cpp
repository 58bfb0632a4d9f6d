#include "monopath/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace monopath {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // multiplicative formula with 128-bit intermediates, exact at each step
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > kMax / base) {
            throw std::overflow_error("power exceeds 64 bits");
        }
        r *= base;
    }
    return r;
}

BinomialTable::BinomialTable(std::uint64_t max_n, int max_k)
    : stride_(static_cast<std::size_t>(max_k) + 1),
      table_((max_n + 1) * stride_, 0) {
    for (std::uint64_t a = 0; a <= max_n; ++a) {
        table_[a * stride_] = 1;
        for (int b = 1; b <= max_k; ++b) {
            if (a == 0) {
                continue;
            }
            std::uint64_t x = table_[(a - 1) * stride_ + b - 1];
            std::uint64_t y = table_[(a - 1) * stride_ + b];
            // saturate; such entries never index anything that fits in memory
            table_[a * stride_ + b] = (x > kMax - y) ? kMax : x + y;
        }
    }
}

bool strictly_increasing(std::span<const Vertex> seq) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i - 1] >= seq[i]) {
            return false;
        }
    }
    return true;
}

std::uint64_t colex_rank(std::span<const Vertex> subset) {
    if (!subset.empty() && subset.front() == 0) {
        throw std::invalid_argument("colex_rank: vertices are 1-based");
    }
    if (!strictly_increasing(subset)) {
        throw std::invalid_argument("colex_rank: subset is not strictly increasing");
    }
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        rank += binomial(subset[i] - 1, i + 1);
    }
    return rank;
}

std::vector<Vertex> colex_unrank(std::uint64_t rank, int k) {
    std::vector<Vertex> subset(static_cast<std::size_t>(k));
    for (int i = k; i >= 1; --i) {
        // largest s with C(s - 1, i) <= rank
        Vertex s = static_cast<Vertex>(i);
        while (binomial(s, static_cast<std::uint64_t>(i)) <= rank) {
            ++s;
        }
        subset[static_cast<std::size_t>(i - 1)] = s;
        rank -= binomial(s - 1, static_cast<std::uint64_t>(i));
    }
    return subset;
}

std::vector<Vertex> first_subset(int k) {
    std::vector<Vertex> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        s[static_cast<std::size_t>(i)] = static_cast<Vertex>(i + 1);
    }
    return s;
}

bool next_colex(std::span<Vertex> subset, Vertex n) {
    const std::size_t k = subset.size();
    for (std::size_t i = 0; i < k; ++i) {
        Vertex limit = (i + 1 < k) ? subset[i + 1] : n + 1;
        if (subset[i] + 1 < limit) {
            ++subset[i];
            for (std::size_t j = 0; j < i; ++j) {
                subset[j] = static_cast<Vertex>(j + 1);
            }
            return true;
        }
    }
    return false;
}

} // namespace monopath
