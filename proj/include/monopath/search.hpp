#pragma once

#include "monopath/coloring.hpp"
#include "monopath/search_budget.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace monopath {

using BigInt = boost::multiprecision::cpp_int;

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
};

// Is there a q-coloring of the k-subsets of [N] without a monochromatic
// monotone path of n vertices? Edges are assigned in colex order, colors
// ascending, with the first edge fixed to color 1. Partial colorings are
// pruned as soon as some path reaches n vertices, and states at vertex
// boundaries that are known dead ends are skipped.
SearchResult<OrderedColoring> exists_witness(Vertex N, int k, int q, int n, SearchBudget budget = {},
                                             SearchStats* stats = nullptr);

// Least N for which exists_witness answers None. Throws BudgetExhausted.
Vertex n_exact(int k, int q, int n, SearchBudget budget = {});

// t_1 = x, t_{i+1} = n^{t_i}. Throws std::overflow_error once an exponent
// exceeds 2^24 (the result would have millions of digits).
BigInt tower(int i, const BigInt& x, const BigInt& n);

} // namespace monopath
