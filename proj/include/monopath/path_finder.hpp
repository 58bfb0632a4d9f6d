#pragma once

#include "monopath/longest_path.hpp"
#include "monopath/online_game.hpp"
#include "monopath/search.hpp"

namespace monopath {

class NotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BelowThreshold : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ThresholdPolicy { Enforce, Override };

// Vertex count from which the recursive finder is guaranteed to succeed:
// (n-1)^q + 1 for graphs, else the bound for k-1 uniform colorings with
// (n-k+1)^(q-1) colors. nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> recursive_threshold(int k, int q, int n);

// Returns a monochromatic path of n vertices, verified before returning.
// If no color below q has one, labels each (k-1)-tuple by its vector of
// path lengths in colors 1..q-1 (each in [k-1, n-1]), finds a path of n
// vertices that is monochromatic for these labels one uniformity down, and
// returns it: all its edges have color q. For graphs the DP answers directly.
// Throws BelowThreshold (Enforce, N too small) or NotFound.
MonotonePath find_path_recursive(const OrderedColoring& c, int n,
                                 ThresholdPolicy policy = ThresholdPolicy::Enforce);

using ColorOracle = std::function<Color(std::span<const Vertex>)>;

// Deterministic pseudo-random q-coloring of k-subsets, keyed by the seed.
ColorOracle random_oracle(int q, std::uint64_t seed);

struct ReductionRecord {
    std::size_t stage = 0;        // t, the index of v_t
    std::vector<Vertex> edge;     // the auxiliary edge, in original vertex labels
    Color color = 0;              // majority color over the survivors
    std::size_t survivors = 0;    // |S| after this edge
};

struct ReductionStage {
    std::size_t stage = 0;
    Vertex vertex = 0;            // v_t
    std::size_t before = 0;       // |S_{t-1}|
    std::size_t after = 0;        // |S_t|
    std::size_t edges = 0;        // m_t
};

struct ReductionResult {
    MonotonePath path;
    std::vector<ReductionRecord> records;
    std::vector<ReductionStage> stages;
    std::vector<Vertex> chosen;   // v_1, v_2, ...
    GameTranscript game;          // the auxiliary game, vertices renumbered 1..t
    // |S_t| * q^m_t >= |S_{t-1}| - 1 at every stage
    bool survivor_bound_holds() const;
};

class SurvivorsExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Plays the modified online game one uniformity down, with target n + k - 2:
// v_t = min S, each drawn edge e is colored by the majority color of e + {w}
// over survivors w (lowest color on ties) and S shrinks to the majority
// class. The last n vertices of the auxiliary path form a monochromatic
// path in chi, checked against the oracle before returning.
ReductionResult find_path_online_reduction(const ColorOracle& chi, int k, int q, int n, Vertex N,
                                           OnlineBuilder& builder);

} // namespace monopath
