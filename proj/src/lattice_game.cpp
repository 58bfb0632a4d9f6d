#include "monopath/lattice_game.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace monopath {

bool precedes(const GridPoint& p, const GridPoint& r) {
    if (p == r) {
        return false;
    }
    for (std::size_t k = 0; k < p.dim(); ++k) {
        if (p[k] > r[k]) {
            return false;
        }
    }
    return true;
}

std::size_t position(const GridPoint& p, const std::vector<GridPoint>& S) {
    if (S.empty()) {
        throw std::invalid_argument("position: empty set");
    }
    std::size_t best = S.size();
    for (std::size_t k = 0; k < p.dim(); ++k) {
        std::size_t count = 0;
        for (const auto& s : S) {
            if (p[k] >= s[k]) {
                ++count;
            }
        }
        best = std::min(best, count);
    }
    return best;
}

double step_bound(int q, int n) {
    if (q < 2 || n < 1) {
        throw std::invalid_argument("step_bound: need q >= 2 and n >= 1");
    }
    return 1.0 + (q - 1) * std::log(static_cast<double>(n)) /
                     std::log(static_cast<double>(q) / (q - 1));
}

std::size_t LatticeTranscript::total_steps() const {
    std::size_t total = 0;
    for (const auto& s : stages) {
        total += s.steps.size();
    }
    return total;
}

std::size_t LatticeTranscript::max_stage_steps() const {
    std::size_t best = 0;
    for (const auto& s : stages) {
        best = std::max(best, s.steps.size());
    }
    return best;
}

bool LatticeTranscript::won() const {
    if (stages.empty()) {
        return false;
    }
    const auto& c = stages.back().point.coords;
    return std::any_of(c.begin(), c.end(), [this](int x) { return x >= n; });
}

std::optional<std::string> LatticeTranscript::validate() const {
    try {
        LatticeBoard b(q, n);
        for (std::size_t i = 0; i < stages.size(); ++i) {
            const auto& st = stages[i];
            const std::string where = "stage " + std::to_string(i + 1) + ": ";
            for (const auto& step : st.steps) {
                if (b.forced_win()) {
                    return where + "steps continue after a forced win";
                }
                b.apply_step(step.pick, step.coord);
            }
            const auto& pts = b.points();
            const bool fresh = std::find(pts.begin(), pts.end(), st.point) == pts.end();
            if (fresh != st.new_point) {
                return where + "new-point flag is wrong";
            }
            b.close_stage(st.point);
            const bool last = i + 1 == stages.size();
            const auto& c = st.point.coords;
            const bool wins = std::any_of(c.begin(), c.end(), [this](int x) { return x >= n; });
            if (wins != last) {
                return where + (wins ? "game continues after a win" : "game ends without a win");
            }
        }
    } catch (const std::exception& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

LatticeBoard::LatticeBoard(int q, int n) : q_(q), n_(n), lower_{std::vector<int>(static_cast<std::size_t>(q), 1)} {
    if (q < 1 || n < 1) {
        throw std::invalid_argument("lattice game: need q >= 1 and n >= 1");
    }
}

bool LatticeBoard::forced_win() const {
    return std::any_of(lower_.coords.begin(), lower_.coords.end(), [this](int x) { return x >= n_; });
}

bool LatticeBoard::satisfies(const GridPoint& p) const {
    if (p.dim() != static_cast<std::size_t>(q_)) {
        return false;
    }
    for (std::size_t k = 0; k < p.dim(); ++k) {
        if (p[k] < lower_[k]) {
            return false;
        }
    }
    return true;
}

void LatticeBoard::apply_step(std::size_t j, int k) {
    if (j < 1 || j > points_.size()) {
        throw StrategyError("builder: picked point " + std::to_string(j) + " of " +
                            std::to_string(points_.size()));
    }
    if (k < 1 || k > q_) {
        throw StrategyError("coordinator: coordinate " + std::to_string(k) + " outside [1," +
                            std::to_string(q_) + "]");
    }
    const auto kk = static_cast<std::size_t>(k - 1);
    lower_.coords[kk] = std::max(lower_.coords[kk], points_[j - 1][kk] + 1);
    steps_.push_back({j, k});
}

void LatticeBoard::close_stage(const GridPoint& p) {
    if (!satisfies(p)) {
        throw StrategyError("coordinator: point violates the stage's constraints");
    }
    points_.push_back(p);
    steps_.clear();
    lower_.coords.assign(static_cast<std::size_t>(q_), 1);
}

namespace {

std::vector<GridPoint> grid_points(int q, int side) {
    std::vector<GridPoint> pts;
    if (side < 1) {
        return pts;
    }
    GridPoint p{std::vector<int>(static_cast<std::size_t>(q), 1)};
    while (true) {
        pts.push_back(p);
        std::size_t k = static_cast<std::size_t>(q);
        while (k > 0 && p.coords[k - 1] == side) {
            p.coords[k - 1] = 1;
            --k;
        }
        if (k == 0) {
            break;
        }
        ++p.coords[k - 1];
    }
    return pts;
}

int coord_sum(const GridPoint& p) {
    int s = 0;
    for (int x : p.coords) {
        s += x;
    }
    return s;
}

class MaximalElementBuilder : public LatticeBuilder {
public:
    void begin_stage(const LatticeBoard& b) override {
        live_.clear();
        seen_steps_ = 0;
        const auto& pts = b.points();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < pts.size() && maximal; ++j) {
                if (precedes(pts[i], pts[j]) || (j < i && pts[j] == pts[i])) {
                    maximal = false;
                }
            }
            if (maximal) {
                live_.push_back(i + 1);
            }
        }
    }

    std::optional<std::size_t> pick(const LatticeBoard& b) override {
        // drop the points the latest answer has dealt with
        const auto& steps = b.steps();
        for (; seen_steps_ < steps.size(); ++seen_steps_) {
            const auto [j, k] = steps[seen_steps_];
            const auto kk = static_cast<std::size_t>(k - 1);
            const int bar = b.point(j)[kk];
            std::erase_if(live_, [&](std::size_t s) { return b.point(s)[kk] <= bar; });
        }
        if (live_.empty()) {
            return std::nullopt;
        }
        std::vector<GridPoint> m;
        for (auto s : live_) {
            m.push_back(b.point(s));
        }
        std::size_t best = live_.front();
        std::size_t best_pos = 0;
        for (std::size_t i = 0; i < live_.size(); ++i) {
            const auto pos = position(m[i], m);
            if (pos > best_pos) {
                best_pos = pos;
                best = live_[i];
            }
        }
        return best;
    }

private:
    std::vector<std::size_t> live_; // 1-based indices of M_h
    std::size_t seen_steps_ = 0;
};

class LevelCoordinator : public LatticeCoordinator {
public:
    LevelCoordinator(int q, int n) : q_(q), all_(grid_points(q, n - 1)) {}

    void begin_stage(const LatticeBoard& b) override {
        std::set<GridPoint> placed(b.points().begin(), b.points().end());
        cand_.clear();
        int level = -1;
        for (const auto& p : all_) {
            if (placed.count(p) == 0) {
                const int s = coord_sum(p);
                if (level < 0 || s < level) {
                    level = s;
                }
            }
        }
        for (const auto& p : all_) {
            if (coord_sum(p) == level && placed.count(p) == 0) {
                cand_.push_back(p);
            }
        }
        pool_ = cand_.size();
    }

    int answer(const LatticeBoard& b, std::size_t j) override {
        if (cand_.empty()) {
            return 1;
        }
        const GridPoint& p = b.point(j);
        for (int k = 1; k <= q_; ++k) {
            const auto kk = static_cast<std::size_t>(k - 1);
            std::size_t count = 0;
            for (const auto& s : cand_) {
                if (s[kk] > p[kk]) {
                    ++count;
                }
            }
            if (count * static_cast<std::size_t>(q_) >= cand_.size()) {
                std::erase_if(cand_, [&](const GridPoint& s) { return s[kk] <= p[kk]; });
                return k;
            }
        }
        throw std::logic_error("level coordinator: no coordinate keeps a 1/q share");
    }

    GridPoint choose(const LatticeBoard& b) override {
        if (cand_.size() == 1) {
            return cand_.front();
        }
        if (cand_.size() > 1) {
            // an earlier-level point, already in the sequence
            GridPoint z = cand_[0];
            for (std::size_t k = 0; k < z.dim(); ++k) {
                z.coords[k] = std::min(cand_[0][k], cand_[1][k]);
            }
            return z;
        }
        return b.lower_bound();
    }

    std::optional<std::size_t> pool() const override { return pool_; }

private:
    int q_;
    std::vector<GridPoint> all_;
    std::vector<GridPoint> cand_;
    std::size_t pool_ = 0;
};

class ExtensionCoordinator : public LatticeCoordinator {
public:
    ExtensionCoordinator(int q, int n, std::uint64_t seed)
        : q_(q), order_(grid_points(q, n - 1)), rng_(make_rng(seed, 0x1a77)) {
        if (seed != 0) {
            std::shuffle(order_.begin(), order_.end(), rng_);
        }
        std::stable_sort(order_.begin(), order_.end(), [](const GridPoint& a, const GridPoint& b) {
            return coord_sum(a) < coord_sum(b);
        });
    }

    void begin_stage(const LatticeBoard& b) override {
        std::set<GridPoint> placed(b.points().begin(), b.points().end());
        while (next_ < order_.size() && placed.count(order_[next_]) != 0) {
            ++next_;
        }
    }

    int answer(const LatticeBoard& b, std::size_t j) override {
        std::vector<int> ok;
        for (int k = 1; k <= q_; ++k) {
            const auto kk = static_cast<std::size_t>(k - 1);
            if (next_ == order_.size() || order_[next_][kk] > b.point(j)[kk]) {
                ok.push_back(k);
            }
        }
        if (ok.empty()) {
            throw std::logic_error("extension coordinator: target dominated by an earlier point");
        }
        std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
        return ok[pick(rng_)];
    }

    GridPoint choose(const LatticeBoard& b) override {
        if (next_ < order_.size() && b.satisfies(order_[next_])) {
            return order_[next_];
        }
        return b.lower_bound();
    }

private:
    int q_;
    std::vector<GridPoint> order_;
    std::size_t next_ = 0;
    Rng rng_;
};

class RandomCoordinator : public LatticeCoordinator {
public:
    RandomCoordinator(int q, std::uint64_t seed) : q_(q), rng_(make_rng(seed, 0xc00d)) {}

    int answer(const LatticeBoard&, std::size_t) override {
        std::uniform_int_distribution<int> pick(1, q_);
        return pick(rng_);
    }
    GridPoint choose(const LatticeBoard& b) override { return b.lower_bound(); }

private:
    int q_;
    Rng rng_;
};

class RandomLatticeBuilder : public LatticeBuilder {
public:
    RandomLatticeBuilder(std::uint64_t seed, double p) : rng_(make_rng(seed, 0xb11d)), p_(p) {}

    std::optional<std::size_t> pick(const LatticeBoard& b) override {
        if (b.points().empty()) {
            return std::nullopt;
        }
        if (!b.steps().empty() && std::uniform_real_distribution<double>(0, 1)(rng_) >= p_) {
            return std::nullopt;
        }
        std::uniform_int_distribution<std::size_t> pick(1, b.points().size());
        return pick(rng_);
    }

private:
    Rng rng_;
    double p_;
};

} // namespace

std::unique_ptr<LatticeBuilder> builder_strategy(int, int) {
    return std::make_unique<MaximalElementBuilder>();
}

std::unique_ptr<LatticeCoordinator> coordinator_strategy(int q, int n) {
    return std::make_unique<LevelCoordinator>(q, n);
}

std::unique_ptr<LatticeCoordinator> extension_coordinator(int q, int n, std::uint64_t seed) {
    return std::make_unique<ExtensionCoordinator>(q, n, seed);
}

std::unique_ptr<LatticeCoordinator> random_coordinator(int q, int, std::uint64_t seed) {
    return std::make_unique<RandomCoordinator>(q, seed);
}

std::unique_ptr<LatticeBuilder> random_lattice_builder(std::uint64_t seed, double continue_prob) {
    return std::make_unique<RandomLatticeBuilder>(seed, continue_prob);
}

LatticeTranscript play_lattice(LatticeBuilder& builder, LatticeCoordinator& coordinator, int q, int n,
                               LatticeOptions opt) {
    LatticeBoard board(q, n);
    LatticeTranscript t{q, n, {}};
    while (t.stages.size() < opt.max_stages) {
        builder.begin_stage(board);
        coordinator.begin_stage(board);
        LatticeStage stage;
        if (!board.points().empty()) {
            while (!board.forced_win()) {
                const auto j = builder.pick(board);
                if (!j) {
                    break;
                }
                if (*j < 1 || *j > board.points().size()) {
                    throw StrategyError("builder: picked point " + std::to_string(*j) + " of " +
                                        std::to_string(board.points().size()));
                }
                board.apply_step(*j, coordinator.answer(board, *j));
            }
        }
        stage.steps = board.steps();
        stage.point = coordinator.choose(board);
        stage.pool = coordinator.pool();
        const auto& pts = board.points();
        stage.new_point = std::find(pts.begin(), pts.end(), stage.point) == pts.end();
        board.close_stage(stage.point);
        t.stages.push_back(std::move(stage));
        if (t.won()) {
            return t;
        }
    }
    throw StrategyError("lattice game: no winner within " + std::to_string(opt.max_stages) + " stages");
}

} // namespace monopath
