#pragma once

#include "monopath/longest_path.hpp"

#include <optional>

namespace monopath {

// A (k+1)-tuple whose two consecutive windows share color `color` while
// some other k-subset of it does not.
struct TransitivityViolation {
    std::vector<Vertex> tuple;
    Color color = 0;
};

// nullopt iff every color class is transitive.
std::optional<TransitivityViolation> is_transitive(const OrderedColoring& c);

// Least superset of `edges` (k-subsets of [N], each strictly increasing)
// closed under the rule: if (i_1..i_k) and (i_2..i_{k+1}) are in, so is
// every k-subset of {i_1..i_{k+1}}. Returned in colex order.
std::vector<std::vector<Vertex>> transitive_closure(int k, Vertex N,
                                                    const std::vector<std::vector<Vertex>>& edges);

struct Clique {
    std::vector<Vertex> vertices;
    Color color = 0;
};

bool is_monochromatic_clique(const OrderedColoring& c, const Clique& clique);

class NoPathFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// In a transitive coloring the vertices of a monochromatic monotone path
// span a monochromatic clique. Throws std::invalid_argument on a
// non-transitive coloring and NoPathFound when the DP finds no path of n.
Clique extract_clique(const OrderedColoring& c, int n);

} // namespace monopath
