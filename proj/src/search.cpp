#include "monopath/search.hpp"

#include "monopath/longest_path.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace monopath {

namespace {

struct EdgeStep {
    std::uint64_t suffix = 0;  // rank of the last k-1 vertices
    std::uint64_t prefix = 0;  // rank of the first k-1 vertices
    bool closes_vertex = false; // last edge whose top vertex is `top`
    Vertex top = 0;
};

constexpr std::size_t kMemoLimit = 4'000'000;

class PathFreeSearch {
public:
    PathFreeSearch(Vertex N, int k, int q, int n, const SearchBudget& budget)
        : N_(N), k_(k), q_(q), n_(static_cast<std::uint16_t>(n)), meter_(budget),
          memo_(N + 1) {
        const auto tuples = binomial(N, static_cast<std::uint64_t>(k - 1));
        len_.assign(tuples * static_cast<std::uint64_t>(q), static_cast<std::uint16_t>(k - 1));
        std::vector<Vertex> e = first_subset(k);
        do {
            EdgeStep s;
            s.suffix = colex_rank(std::span<const Vertex>(e).subspan(1));
            s.prefix = colex_rank(std::span<const Vertex>(e).first(static_cast<std::size_t>(k - 1)));
            s.top = e.back();
            steps_.push_back(s);
        } while (next_colex(e, N));
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            steps_[i].closes_vertex = i + 1 == steps_.size() || steps_[i + 1].top != steps_[i].top;
        }
        colors_.assign(steps_.size(), 0);
    }

    Outcome run() { return extend(0); }
    std::uint64_t nodes() const { return meter_.nodes(); }
    std::uint64_t memo_hits() const { return hits_; }
    OrderedColoring coloring() const { return OrderedColoring(k_, q_, N_, colors_); }

private:
    // len values of every tuple inside [v]; for graphs the multiset of
    // per-vertex vectors suffices since earlier vertices are interchangeable
    std::string state_key(Vertex v) const {
        const auto q = static_cast<std::size_t>(q_);
        const std::size_t count = binomial(v, static_cast<std::uint64_t>(k_ - 1)) * q;
        if (k_ == 2) {
            std::vector<std::string> rows;
            rows.reserve(v);
            for (Vertex a = 0; a < v; ++a) {
                rows.emplace_back(reinterpret_cast<const char*>(len_.data() + a * q), q * 2);
            }
            std::sort(rows.begin(), rows.end());
            std::string key;
            for (auto& r : rows) {
                key += r;
            }
            return key;
        }
        return std::string(reinterpret_cast<const char*>(len_.data()), count * 2);
    }

    Outcome extend(std::size_t i) {
        if (!meter_.tick()) {
            return Outcome::BudgetExhausted;
        }
        if (i == steps_.size()) {
            return Outcome::Found;
        }
        if (i > 0 && steps_[i - 1].closes_vertex) {
            const Vertex v = steps_[i - 1].top;
            std::string key = state_key(v);
            if (memo_[v].count(key) != 0) {
                ++hits_;
                return Outcome::None;
            }
            const Outcome r = descend(i);
            if (r == Outcome::None && memo_[v].size() < kMemoLimit) {
                memo_[v].insert(std::move(key));
            }
            return r;
        }
        return descend(i);
    }

    Outcome descend(std::size_t i) {
        const EdgeStep& s = steps_[i];
        const auto q = static_cast<std::uint64_t>(q_);
        const int top = (i == 0) ? 1 : q_;
        for (int c = 1; c <= top; ++c) {
            const std::uint16_t cand = static_cast<std::uint16_t>(len_[s.prefix * q + (c - 1)] + 1);
            if (cand >= n_) {
                continue;
            }
            std::uint16_t& slot = len_[s.suffix * q + (c - 1)];
            const std::uint16_t saved = slot;
            slot = std::max(slot, cand);
            colors_[i] = static_cast<Color>(c);
            const Outcome r = extend(i + 1);
            if (r != Outcome::None) {
                return r;
            }
            slot = saved;
        }
        return Outcome::None;
    }

    Vertex N_;
    int k_;
    int q_;
    std::uint16_t n_;
    BudgetMeter meter_;
    std::vector<EdgeStep> steps_;
    std::vector<std::uint16_t> len_;
    std::vector<Color> colors_;
    std::vector<std::unordered_set<std::string>> memo_;
    std::uint64_t hits_ = 0;
};

} // namespace

SearchResult<OrderedColoring> exists_witness(Vertex N, int k, int q, int n, SearchBudget budget,
                                             SearchStats* stats) {
    if (k < 2 || q < 1 || n < 1 || n > 65535) {
        throw std::invalid_argument("exists_witness: need k >= 2, q >= 1, 1 <= n <= 65535");
    }
    if (N < static_cast<Vertex>(k)) {
        throw std::invalid_argument("exists_witness: need N >= k");
    }
    SearchResult<OrderedColoring> r;
    if (n < k) {
        // n vertices of [N] are always a path of length n
        r.outcome = Outcome::None;
        return r;
    }
    PathFreeSearch s(N, k, q, n, budget);
    r.outcome = s.run();
    r.nodes = s.nodes();
    if (stats != nullptr) {
        stats->nodes = s.nodes();
        stats->memo_hits = s.memo_hits();
    }
    if (r.outcome == Outcome::Found) {
        r.witness = s.coloring();
        if (longest_mono_path_length(*r.witness) >= n) {
            throw std::logic_error("exists_witness: search produced an invalid witness");
        }
    }
    return r;
}

Vertex n_exact(int k, int q, int n, SearchBudget budget) {
    if (n < k) {
        return static_cast<Vertex>(std::max(n, 0));
    }
    // below n vertices there is nothing to avoid
    for (auto N = static_cast<Vertex>(n);; ++N) {
        auto r = exists_witness(N, k, q, n, budget);
        if (r.outcome == Outcome::BudgetExhausted) {
            throw BudgetExhausted();
        }
        if (r.outcome == Outcome::None) {
            return N;
        }
    }
}

BigInt tower(int i, const BigInt& x, const BigInt& n) {
    if (i < 1) {
        throw std::invalid_argument("tower: need i >= 1");
    }
    BigInt t = x;
    for (int j = 1; j < i; ++j) {
        if (t > (BigInt(1) << 24)) {
            throw std::overflow_error("tower: exponent too large");
        }
        t = boost::multiprecision::pow(n, static_cast<unsigned>(t));
    }
    return t;
}

} // namespace monopath
