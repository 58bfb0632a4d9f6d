#include "monopath/online_game.hpp"

#include <algorithm>

namespace monopath {

std::size_t GameTranscript::total_edges() const {
    std::size_t total = 0;
    for (const auto& s : stages) {
        total += s.size();
    }
    return total;
}

std::optional<std::string> GameTranscript::validate() const {
    try {
        OnlineBoard b(k, q, n);
        for (std::size_t i = 0; i < stages.size(); ++i) {
            const std::string where = "stage " + std::to_string(i + 1) + ": ";
            b.begin_stage();
            if (modified && i + 1 >= static_cast<std::size_t>(k) && stages[i].empty() && !b.has_path()) {
                return where + "modified game requires an edge";
            }
            for (const auto& e : stages[i]) {
                if (b.has_path()) {
                    return where + "edges drawn after the game was won";
                }
                b.draw(e.prefix, e.color);
            }
            if (b.has_path() != (i + 1 == stages.size())) {
                return where + (b.has_path() ? "game continues after a win" : "game ends without a win");
            }
        }
        if (stages.empty()) {
            return std::string("empty transcript");
        }
        // the claimed path must run along drawn edges of one color
        const auto& v = path.vertices;
        if (v.size() != static_cast<std::size_t>(n) || !strictly_increasing(v) || v.empty() ||
            v.front() < 1 || v.back() > stages.size() || path.color < 1 || path.color > q) {
            return std::string("path: malformed");
        }
        const auto kk = static_cast<std::size_t>(k);
        for (std::size_t i = 0; i + kk <= v.size(); ++i) {
            std::vector<Vertex> prefix(v.begin() + static_cast<std::ptrdiff_t>(i),
                                       v.begin() + static_cast<std::ptrdiff_t>(i + kk - 1));
            const auto& st = stages[v[i + kk - 1] - 1];
            const bool ok = std::any_of(st.begin(), st.end(), [&](const DrawnEdge& e) {
                return e.prefix == prefix && e.color == path.color;
            });
            if (!ok) {
                return "path: window at vertex " + std::to_string(v[i]) + " is not a drawn edge of color " +
                       std::to_string(path.color);
            }
        }
    } catch (const std::exception& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

OnlineBoard::OnlineBoard(int k, int q, int n) : k_(k), q_(q), n_(n) {
    if (k < 2 || q < 1 || n < 1 || n > 65535) {
        throw std::invalid_argument("online game: need k >= 2, q >= 1, 1 <= n <= 65535");
    }
}

bool OnlineBoard::drawn(std::span<const Vertex> prefix) const {
    if (stages_.empty()) {
        return false;
    }
    const auto& st = stages_.back();
    return std::any_of(st.begin(), st.end(), [&](const DrawnEdge& e) {
        return std::equal(e.prefix.begin(), e.prefix.end(), prefix.begin(), prefix.end());
    });
}

std::uint16_t OnlineBoard::length(std::span<const Vertex> tuple, Color c) const {
    auto it = table_.find(std::vector<Vertex>(tuple.begin(), tuple.end()));
    if (it == table_.end()) {
        return static_cast<std::uint16_t>(k_ - 1);
    }
    return it->second.len[c - 1];
}

GridPoint OnlineBoard::lengths_at(Vertex v) const {
    if (k_ != 2) {
        throw std::logic_error("lengths_at: only for graphs");
    }
    GridPoint p;
    const Vertex tuple[1] = {v};
    for (int c = 1; c <= q_; ++c) {
        p.coords.push_back(length(tuple, static_cast<Color>(c)));
    }
    return p;
}

bool OnlineBoard::has_path() const {
    return winner_.has_value() || (n_ < k_ && t_ >= static_cast<Vertex>(n_));
}

MonotonePath OnlineBoard::path() const {
    MonotonePath p;
    if (!winner_) {
        if (!has_path()) {
            throw std::logic_error("online board: no path yet");
        }
        p.color = 1;
        for (Vertex v = 1; v <= static_cast<Vertex>(n_); ++v) {
            p.vertices.push_back(v);
        }
        return p;
    }
    auto [tuple, c] = *winner_;
    p.color = c;
    std::vector<Vertex> rev(tuple.rbegin(), tuple.rend());
    while (true) {
        auto it = table_.find(tuple);
        if (it == table_.end() || it->second.back[c - 1] == 0) {
            break;
        }
        const Vertex a = it->second.back[c - 1];
        rev.push_back(a);
        tuple.pop_back();
        tuple.insert(tuple.begin(), a);
    }
    p.vertices.assign(rev.rbegin(), rev.rend());
    if (p.vertices.size() > static_cast<std::size_t>(n_)) {
        p.vertices.erase(p.vertices.begin(), p.vertices.end() - n_);
    }
    return p;
}

void OnlineBoard::begin_stage() {
    ++t_;
    stages_.emplace_back();
}

void OnlineBoard::draw(std::span<const Vertex> prefix, Color c) {
    if (t_ == 0) {
        throw StrategyError("builder: no stage in progress");
    }
    if (prefix.size() != static_cast<std::size_t>(k_ - 1) || !strictly_increasing(prefix) ||
        prefix.front() < 1 || prefix.back() >= t_) {
        throw StrategyError("builder: illegal edge prefix at stage " + std::to_string(t_));
    }
    if (drawn(prefix)) {
        throw StrategyError("builder: edge drawn twice at stage " + std::to_string(t_));
    }
    if (c < 1 || c > q_) {
        throw StrategyError("painter: color " + std::to_string(c) + " outside [1," + std::to_string(q_) + "]");
    }
    const std::uint16_t cand = static_cast<std::uint16_t>(length(prefix, c) + 1);
    std::vector<Vertex> suffix(prefix.begin() + 1, prefix.end());
    suffix.push_back(t_);
    auto [it, fresh] = table_.try_emplace(suffix);
    Entry& e = it->second;
    if (fresh) {
        e.len.assign(static_cast<std::size_t>(q_), static_cast<std::uint16_t>(k_ - 1));
        e.back.assign(static_cast<std::size_t>(q_), 0);
    }
    if (cand > e.len[c - 1]) {
        e.len[c - 1] = cand;
        e.back[c - 1] = prefix.front();
    }
    if (!winner_ && e.len[c - 1] >= n_) {
        winner_ = std::make_pair(suffix, c);
    }
    stages_.back().push_back({std::vector<Vertex>(prefix.begin(), prefix.end()), c});
    ++total_;
}

namespace {

class RandomPainter : public OnlinePainter {
public:
    RandomPainter(int q, std::uint64_t seed) : q_(q), rng_(make_rng(seed, 0x9a17)) {}
    Color paint(const OnlineBoard&, std::span<const Vertex>) override {
        return static_cast<Color>(std::uniform_int_distribution<int>(1, q_)(rng_));
    }

private:
    int q_;
    Rng rng_;
};

class ConstantPainter : public OnlinePainter {
public:
    explicit ConstantPainter(Color c) : c_(c) {}
    Color paint(const OnlineBoard&, std::span<const Vertex>) override { return c_; }

private:
    Color c_;
};

class LabellingPainter : public OnlinePainter {
public:
    explicit LabellingPainter(OrderedColoring w) : w_(std::move(w)) {}

    Color paint(const OnlineBoard& b, std::span<const Vertex> prefix) override {
        if (label_.size() <= b.stage()) {
            label_.resize(b.stage() + 1, 0);
        }
        if (label_[b.stage()] == 0) {
            label_[b.stage()] = ++next_;
        }
        std::vector<Vertex> labels;
        for (Vertex v : prefix) {
            labels.push_back(label_[v]);
        }
        labels.push_back(label_[b.stage()]);
        const bool inside = std::all_of(labels.begin(), labels.end(),
                                        [&](Vertex l) { return l != 0 && l <= w_.num_vertices(); });
        if (!inside || static_cast<int>(labels.size()) != w_.uniformity()) {
            return 1;
        }
        return w_.color(labels);
    }

private:
    OrderedColoring w_;
    std::vector<Vertex> label_; // 0 = unlabelled
    Vertex next_ = 0;
};

// all (k-1)-subsets of [t-1] not yet drawn this stage
std::vector<std::vector<Vertex>> open_prefixes(const OnlineBoard& b) {
    std::vector<std::vector<Vertex>> out;
    const int m = b.k() - 1;
    if (b.stage() <= static_cast<Vertex>(m)) {
        return out;
    }
    std::vector<Vertex> p = first_subset(m);
    do {
        if (!b.drawn(p)) {
            out.push_back(p);
        }
    } while (next_colex(p, b.stage() - 1));
    return out;
}

class CompleteBuilder : public OnlineBuilder {
public:
    std::optional<std::vector<Vertex>> next_edge(const OnlineBoard& b) override {
        auto open = open_prefixes(b);
        if (open.empty()) {
            return std::nullopt;
        }
        return open.front();
    }
};

class RandomOnlineBuilder : public OnlineBuilder {
public:
    RandomOnlineBuilder(std::uint64_t seed, double p) : rng_(make_rng(seed, 0x0b1d)), p_(p) {}

    std::optional<std::vector<Vertex>> next_edge(const OnlineBoard& b) override {
        auto open = open_prefixes(b);
        if (open.empty()) {
            return std::nullopt;
        }
        if (!b.stages().back().empty() && std::uniform_real_distribution<double>(0, 1)(rng_) >= p_) {
            return std::nullopt;
        }
        return open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng_)];
    }

private:
    Rng rng_;
    double p_;
};

} // namespace

std::unique_ptr<OnlinePainter> random_painter(int q, std::uint64_t seed) {
    return std::make_unique<RandomPainter>(q, seed);
}

std::unique_ptr<OnlinePainter> constant_painter(Color c) {
    return std::make_unique<ConstantPainter>(c);
}

std::unique_ptr<OnlinePainter> labelling_painter(OrderedColoring witness) {
    return std::make_unique<LabellingPainter>(std::move(witness));
}

std::unique_ptr<OnlineBuilder> complete_builder() {
    return std::make_unique<CompleteBuilder>();
}

std::unique_ptr<OnlineBuilder> random_online_builder(std::uint64_t seed, double continue_prob) {
    return std::make_unique<RandomOnlineBuilder>(seed, continue_prob);
}

GameTranscript play_online_ramsey(OnlineBuilder& builder, OnlinePainter& painter, int k, int q, int n,
                                  OnlineOptions opt) {
    OnlineBoard board(k, q, n);
    while (board.stage() < opt.max_stages) {
        board.begin_stage();
        if (!board.has_path()) {
            builder.begin_stage(board);
            painter.begin_stage(board);
            while (!board.has_path()) {
                auto prefix = builder.next_edge(board);
                if (!prefix) {
                    break;
                }
                board.draw(*prefix, painter.paint(board, *prefix));
            }
            if (opt.modified && board.stage() >= static_cast<Vertex>(k) && board.stages().back().empty() &&
                !board.has_path()) {
                throw StrategyError("builder: modified game requires an edge at stage " +
                                    std::to_string(board.stage()));
            }
        }
        if (board.has_path()) {
            return GameTranscript{k, q, n, opt.modified, board.stages(), board.path()};
        }
    }
    throw StrategyError("online game: no winner within " + std::to_string(opt.max_stages) + " stages");
}

} // namespace monopath
