#pragma once

#include "monopath/coloring.hpp"
#include "monopath/lattice_game.hpp"

#include <map>

namespace monopath {

struct DrawnEdge {
    std::vector<Vertex> prefix; // the k-1 earlier vertices; the edge is prefix + {stage vertex}
    Color color = 0;
    friend bool operator==(const DrawnEdge&, const DrawnEdge&) = default;
};

struct GameTranscript {
    int k = 2;
    int q = 2;
    int n = 2;
    bool modified = false;
    std::vector<std::vector<DrawnEdge>> stages; // stage t draws edges ending at vertex t
    MonotonePath path;

    std::size_t total_edges() const;
    // Replays every edge; checks the game ends exactly at the last stage
    // and that the path is monochromatic along drawn edges.
    std::optional<std::string> validate() const;
    friend bool operator==(const GameTranscript&, const GameTranscript&) = default;
};

// Vertices 1..t, with t the current stage. Tracks, for every (k-1)-tuple
// and color, the longest monochromatic path among drawn edges ending there.
class OnlineBoard {
public:
    OnlineBoard(int k, int q, int n);

    int k() const noexcept { return k_; }
    int q() const noexcept { return q_; }
    int n() const noexcept { return n_; }
    Vertex stage() const noexcept { return t_; }
    const std::vector<std::vector<DrawnEdge>>& stages() const noexcept { return stages_; }
    std::size_t total_edges() const noexcept { return total_; }
    bool drawn(std::span<const Vertex> prefix) const; // in the current stage

    // longest path of color c ending with the tuple (at least k-1)
    std::uint16_t length(std::span<const Vertex> tuple, Color c) const;
    // for k = 2: the per-color path lengths ending at v
    GridPoint lengths_at(Vertex v) const;

    bool has_path() const;
    MonotonePath path() const; // requires has_path()

    void begin_stage();
    // Throws StrategyError on an illegal prefix, a repeated edge or a bad color.
    void draw(std::span<const Vertex> prefix, Color c);

private:
    struct Entry {
        std::vector<std::uint16_t> len;
        std::vector<Vertex> back; // first vertex of the predecessor tuple, 0 if none
    };

    int k_;
    int q_;
    int n_;
    Vertex t_ = 0;
    std::size_t total_ = 0;
    std::vector<std::vector<DrawnEdge>> stages_;
    std::map<std::vector<Vertex>, Entry> table_;
    std::optional<std::pair<std::vector<Vertex>, Color>> winner_;
};

class OnlineBuilder {
public:
    virtual ~OnlineBuilder() = default;
    virtual void begin_stage(const OnlineBoard&) {}
    // Next prefix to draw to the newest vertex, or nullopt to end the stage.
    virtual std::optional<std::vector<Vertex>> next_edge(const OnlineBoard& b) = 0;
};

class OnlinePainter {
public:
    virtual ~OnlinePainter() = default;
    virtual void begin_stage(const OnlineBoard&) {}
    virtual Color paint(const OnlineBoard& b, std::span<const Vertex> prefix) = 0;
};

std::unique_ptr<OnlinePainter> random_painter(int q, std::uint64_t seed);
std::unique_ptr<OnlinePainter> constant_painter(Color c);

// Numbers the vertices that become the largest vertex of some edge
// w_1, w_2, ... and colors an edge on labels i_1 < ... < i_k with the
// witness's color of that k-set; every other edge gets color 1. With a
// witness free of paths of n-k+1 vertices the game lasts for at least
// witness.N + 1 edges.
std::unique_ptr<OnlinePainter> labelling_painter(OrderedColoring witness);

// Draws every prefix of the current stage in colex order.
std::unique_ptr<OnlineBuilder> complete_builder();
// Draws random new prefixes; after the first edge of a stage continues
// with the given probability.
std::unique_ptr<OnlineBuilder> random_online_builder(std::uint64_t seed, double continue_prob = 0.6);

struct OnlineOptions {
    bool modified = false; // every stage t >= k must draw an edge
    std::size_t max_stages = 1'000'000;
};

GameTranscript play_online_ramsey(OnlineBuilder& builder, OnlinePainter& painter, int k, int q, int n,
                                  OnlineOptions opt = {});

} // namespace monopath
