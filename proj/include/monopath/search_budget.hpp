#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace monopath {

struct SearchBudget {
    std::optional<std::uint64_t> node_cap;
    std::optional<std::chrono::milliseconds> time_cap;
};

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("search budget exhausted") {}
};

// Counts nodes and checks the clock every few thousand of them.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // false once the budget is spent
    bool tick() {
        ++nodes_;
        if (budget_.node_cap && nodes_ > *budget_.node_cap) {
            return false;
        }
        if (budget_.time_cap && (nodes_ & 0xfff) == 0 &&
            std::chrono::steady_clock::now() - start_ > *budget_.time_cap) {
            return false;
        }
        return true;
    }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

enum class Outcome { Found, None, BudgetExhausted };

template <class T>
struct SearchResult {
    Outcome outcome = Outcome::None;
    std::optional<T> witness; // set iff outcome == Found
    std::uint64_t nodes = 0;
};

} // namespace monopath
