#pragma once

#include "monopath/coloring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace monopath {

using Rational = boost::multiprecision::cpp_rational;

// Exact planar point. Small integer coordinates are mirrored into int64 so
// the orientation predicate can skip rational arithmetic.
class Point {
public:
    Point() : Point(Rational(0), Rational(0)) {}
    Point(Rational x, Rational y);
    Point(long long x, long long y) : Point(Rational(x), Rational(y)) {}

    const Rational& x() const noexcept { return x_; }
    const Rational& y() const noexcept { return y_; }
    bool small() const noexcept { return small_; }
    std::int64_t sx() const noexcept { return sx_; }
    std::int64_t sy() const noexcept { return sy_; }

    friend bool operator==(const Point& a, const Point& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
    // lexicographic by (x, y)
    friend bool operator<(const Point& a, const Point& b) {
        return a.x_ < b.x_ || (a.x_ == b.x_ && a.y_ < b.y_);
    }

private:
    Rational x_;
    Rational y_;
    bool small_ = false;
    std::int64_t sx_ = 0;
    std::int64_t sy_ = 0;
};

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn.
int orient(const Point& a, const Point& b, const Point& c);

// Strict convex hull (collinear boundary points dropped), counterclockwise,
// starting at the lexicographically smallest point. Indices into pts.
std::vector<std::size_t> convex_hull(const std::vector<Point>& pts);

// Closed containment in a strictly convex counterclockwise polygon.
bool in_convex_polygon(const std::vector<Point>& ccw, const Point& p);
bool strictly_inside_convex_polygon(const std::vector<Point>& ccw, const Point& p);

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A strictly convex polygon with a unique leftmost vertex. Vertices are
// stored counterclockwise starting at the leftmost one. id is the 1-based
// position in a family (0 when detached).
class ConvexBody {
public:
    // Accepts either orientation; throws GeometryError if the points are not
    // the vertices of a strictly convex polygon in cyclic order, or if the
    // leftmost vertex is not unique.
    explicit ConvexBody(std::vector<Point> vertices, int id = 0);

    const std::vector<Point>& vertices() const noexcept { return vertices_; }
    const Point& leftmost() const noexcept { return vertices_.front(); }
    int id() const noexcept { return id_; }
    void set_id(int id) noexcept { id_ = id; }

    friend bool operator==(const ConvexBody& a, const ConvexBody& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    std::vector<Point> vertices_;
    int id_ = 0;
};

// Distinct points shared by the two boundaries, or nullopt when they share a
// segment (infinitely many points).
std::optional<std::vector<Point>> boundary_intersections(const ConvexBody& a,
                                                         const ConvexBody& b);

// True iff every body has a vertex strictly outside the hull of the others.
bool is_convex_position(const std::vector<ConvexBody>& bodies);

struct Violation {
    std::string kind;  // "crossing pair", "duplicate leftmost x", "triple not in convex position"
    std::vector<int> bodies;  // 1-based positions after sorting
};

struct FamilyReport;

// Bodies sorted by leftmost x and renumbered 1..N.
class ConvexFamily {
public:
    ConvexFamily() = default;

    std::size_t size() const noexcept { return bodies_.size(); }
    const ConvexBody& body(int id) const { return bodies_.at(static_cast<std::size_t>(id - 1)); }
    const std::vector<ConvexBody>& bodies() const noexcept { return bodies_; }

private:
    friend FamilyReport validate_family(std::vector<ConvexBody> bodies);
    std::vector<ConvexBody> bodies_;
};

struct FamilyReport {
    std::optional<ConvexFamily> family;  // set iff there are no violations
    std::vector<Violation> violations;
    // degeneracies polygons cannot rule out exactly: shared or collinear
    // boundary points on a pair or triple hull (common tangents)
    std::vector<std::string> warnings;

    bool ok() const noexcept { return violations.empty(); }
};

FamilyReport validate_family(std::vector<ConvexBody> bodies);

// validate_family, throwing GeometryError on the first violation.
ConvexFamily make_family(std::vector<ConvexBody> bodies);

// Raised on hull vertices owned by two bodies or bodies touching the hull
// boundary only between hull vertices.
class DegenerateError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// Owners of the vertices of conv(C_i + C_j + C_k) in clockwise order,
// starting at the leftmost vertex of C_i, with consecutive repeats merged
// (cyclically). Requires i < j < k.
std::vector<int> hull_label_sequence(const ConvexFamily& f, int i, int j, int k);

enum class TripleOrientation { CwOnly, CcwOnly, Both };

const char* to_string(TripleOrientation o);

// Also checks that C_k never separates the triple and that both strong
// orientations occur exactly when C_j separates it (std::logic_error).
TripleOrientation strong_orientation(const ConvexFamily& f, int i, int j, int k);

// Number of maximal runs of `body` in a cyclic label sequence; a body
// separates the triple iff it owns at least two.
int label_runs(const std::vector<int>& labels, int body);

// 3-uniform, 3-color coloring of [N]: 1 strong-clockwise only, 2
// strong-counterclockwise only, 3 both. Throws std::logic_error if the
// result is not transitive. Rows are split across `workers` threads.
OrderedColoring color_triples(const ConvexFamily& f, int workers = 1);

// n bodies (1-based ids, increasing) in convex position, found through a
// monochromatic monotone path of the triple coloring. Throws NoPathFound.
std::vector<int> find_convex_position(const ConvexFamily& f, int n, int workers = 1);

// Family text format: one body per line, "m x1 y1 ... xm ym"; coordinates
// are decimals ("-1.25", "3e2") or fractions ("7/3"); '#' starts a comment.
std::vector<ConvexBody> read_bodies(std::istream& in);
void write_bodies(const std::vector<ConvexBody>& bodies, std::ostream& out);
Rational parse_rational(const std::string& tok);
std::string format_rational(const Rational& r);

struct RandomFamilyOptions {
    long long box = 200;          // centers in [0, box]^2
    long long min_radius = 4;
    long long max_radius = 40;
    int max_attempts = 20000;     // candidate bodies before giving up
};

// Valid, warning-free family of `size` integer polygons, grown one body at
// a time with rejection. Throws GeometryError if attempts run out.
ConvexFamily random_family(int size, std::uint64_t seed, RandomFamilyOptions opt = {});

// Moves every vertex by an independent offset in [-eps, eps]^2 (multiples
// of eps / 1024), retrying a body until it stays strictly convex.
std::vector<ConvexBody> perturb(const std::vector<ConvexBody>& bodies, const Rational& eps,
                                std::uint64_t seed);

} // namespace monopath
