#pragma once

#include "monopath/random.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monopath {

// A point of the positive integer grid Z^q.
struct GridPoint {
    std::vector<int> coords;

    int operator[](std::size_t k) const { return coords[k]; }
    std::size_t dim() const noexcept { return coords.size(); }
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// p strictly below r in the product order: p != r and p_k <= r_k for all k.
bool precedes(const GridPoint& p, const GridPoint& r);

// min over coordinates k of |{s in S : p_k >= s_k}|. Throws on empty S.
std::size_t position(const GridPoint& p, const std::vector<GridPoint>& S);

// 1 + (q-1) log n / log(q/(q-1)): per-stage step bound of builder_strategy.
double step_bound(int q, int n);

// Misbehaving strategy; the message names the side at fault.
class StrategyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LatticeStep {
    std::size_t pick = 0; // 1-based index j of the compared point p_j
    int coord = 0;        // 1-based coordinate k, forcing x_k > p_j[k]
    friend bool operator==(const LatticeStep&, const LatticeStep&) = default;
};

struct LatticeStage {
    std::vector<LatticeStep> steps;
    GridPoint point;
    bool new_point = true;              // false when the point was already in the sequence
    std::optional<std::size_t> pool;    // |S_0| reported by level-filling coordinators
    friend bool operator==(const LatticeStage&, const LatticeStage&) = default;
};

struct LatticeTranscript {
    int q = 2;
    int n = 2;
    std::vector<LatticeStage> stages;

    std::size_t total_steps() const;
    std::size_t max_stage_steps() const;
    // true once a point has a coordinate >= n
    bool won() const;
    // Replays every move; returns a description of the first violation.
    std::optional<std::string> validate() const;
    friend bool operator==(const LatticeTranscript&, const LatticeTranscript&) = default;
};

// The state both players see: the sequence so far and the current stage.
class LatticeBoard {
public:
    LatticeBoard(int q, int n);

    int q() const noexcept { return q_; }
    int n() const noexcept { return n_; }
    // index of the point under construction, 1-based
    std::size_t stage() const noexcept { return points_.size() + 1; }
    const std::vector<GridPoint>& points() const noexcept { return points_; }
    const GridPoint& point(std::size_t j) const { return points_.at(j - 1); }
    const std::vector<LatticeStep>& steps() const noexcept { return steps_; }
    // coordinate-wise least point satisfying the current stage's steps
    const GridPoint& lower_bound() const noexcept { return lower_; }
    bool forced_win() const;
    bool satisfies(const GridPoint& p) const;

    // Both validate and throw StrategyError.
    void apply_step(std::size_t j, int k);
    void close_stage(const GridPoint& p);

private:
    int q_;
    int n_;
    std::vector<GridPoint> points_;
    std::vector<LatticeStep> steps_;
    GridPoint lower_;
};

class LatticeBuilder {
public:
    virtual ~LatticeBuilder() = default;
    virtual void begin_stage(const LatticeBoard&) {}
    // Index j of a point to compare with, or nullopt to end the stage.
    virtual std::optional<std::size_t> pick(const LatticeBoard& b) = 0;
};

class LatticeCoordinator {
public:
    virtual ~LatticeCoordinator() = default;
    virtual void begin_stage(const LatticeBoard&) {}
    virtual int answer(const LatticeBoard& b, std::size_t j) = 0;
    virtual GridPoint choose(const LatticeBoard& b) = 0;
    // size of the candidate pool at the start of the stage, if tracked
    virtual std::optional<std::size_t> pool() const { return std::nullopt; }
};

// Keeps the maximal elements M of the sequence, picks the point of M with
// the largest position in M (lowest index on ties), drops the points the
// answer has dealt with, and ends the stage once M is empty.
std::unique_ptr<LatticeBuilder> builder_strategy(int q, int n);

// Fills [n-1]^q level by level (coordinate sum), answering with the lowest
// coordinate that keeps at least a 1/q share of the level's candidates.
std::unique_ptr<LatticeCoordinator> coordinator_strategy(int q, int n);

// Plays the points of a random linear extension of the product order on
// [n-1]^q (coordinate sum, random tie order), answering with a random
// coordinate that keeps the next target feasible. Seed 0 breaks ties
// lexicographically.
std::unique_ptr<LatticeCoordinator> extension_coordinator(int q, int n, std::uint64_t seed);

// Random coordinate, then the least feasible point. Its points always equal
// the per-color longest path lengths of the matching online game.
std::unique_ptr<LatticeCoordinator> random_coordinator(int q, int n, std::uint64_t seed);

// Picks uniformly among all earlier points, ends each stage at random after
// at least one step.
std::unique_ptr<LatticeBuilder> random_lattice_builder(std::uint64_t seed, double continue_prob = 0.6);

struct LatticeOptions {
    std::size_t max_stages = 1'000'000;
};

// Runs until a point has a coordinate >= n. A stage also ends as soon as
// its steps force such a coordinate, since every admissible point then wins.
LatticeTranscript play_lattice(LatticeBuilder& builder, LatticeCoordinator& coordinator, int q, int n,
                               LatticeOptions opt = {});

} // namespace monopath
