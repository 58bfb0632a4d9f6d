#include "monopath/geometry.hpp"

#include "monopath/random.hpp"
#include "monopath/transitive.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

namespace monopath {

namespace {

struct Labeled {
    std::vector<Point> pts;
    std::vector<int> owner;
};

Labeled gather(const std::vector<const ConvexBody*>& bodies, const std::vector<int>& ids) {
    Labeled l;
    for (std::size_t b = 0; b < bodies.size(); ++b) {
        for (const auto& p : bodies[b]->vertices()) {
            l.pts.push_back(p);
            l.owner.push_back(ids[b]);
        }
    }
    return l;
}

// Owners of the hull vertices of the union, counterclockwise from the
// lexicographically smallest point.
std::vector<int> hull_owners(const std::vector<const ConvexBody*>& bodies,
                             const std::vector<int>& ids) {
    const Labeled l = gather(bodies, ids);
    const auto hull = convex_hull(l.pts);
    std::vector<Point> poly;
    std::vector<char> on_hull(l.pts.size(), 0);
    for (std::size_t h : hull) {
        poly.push_back(l.pts[h]);
        on_hull[h] = 1;
    }
    for (std::size_t i = 0; i < l.pts.size(); ++i) {
        if (on_hull[i]) {
            continue;
        }
        const bool is_vertex = std::find(poly.begin(), poly.end(), l.pts[i]) != poly.end();
        if (is_vertex) {
            throw DegenerateError("hull vertex shared by two bodies");
        }
        if (!strictly_inside_convex_polygon(poly, l.pts[i])) {
            throw DegenerateError("body touches the hull between hull vertices");
        }
    }
    std::vector<int> owners;
    for (std::size_t h : hull) {
        owners.push_back(l.owner[h]);
    }
    return owners;
}

std::vector<int> compress_cyclic(const std::vector<int>& seq) {
    std::vector<int> out;
    for (int x : seq) {
        if (out.empty() || out.back() != x) {
            out.push_back(x);
        }
    }
    while (out.size() > 1 && out.back() == out.front()) {
        out.pop_back();
    }
    return out;
}

// Clockwise labels from the first body's leftmost vertex; that vertex is
// the union's lexicographic minimum, where the hull starts.
std::vector<int> clockwise_labels(const std::vector<const ConvexBody*>& bodies,
                                  const std::vector<int>& ids) {
    const auto owners = hull_owners(bodies, ids);
    const Point& first = bodies[0]->leftmost();
    for (std::size_t b = 1; b < bodies.size(); ++b) {
        if (!(first.x() < bodies[b]->leftmost().x())) {
            throw std::invalid_argument("hull labels: first body must have the leftmost left endpoint");
        }
    }
    std::vector<int> cw;
    cw.push_back(owners[0]);
    for (std::size_t t = owners.size(); t-- > 1;) {
        cw.push_back(owners[t]);
    }
    return compress_cyclic(cw);
}

bool triple_convex(const ConvexBody& a, const ConvexBody& b, const ConvexBody& c) {
    return is_convex_position({a, b, c});
}

std::string list_ids(std::initializer_list<int> ids) {
    std::string s;
    for (int id : ids) {
        s += (s.empty() ? "" : " ") + std::to_string(id);
    }
    return s;
}

TripleOrientation classify(const std::vector<int>& labels, int i, int j, int k) {
    (void)i;
    bool seen_j = false, seen_k = false, cw = false, ccw = false;
    for (int x : labels) {
        if (x == j) {
            seen_j = true;
            ccw = ccw || seen_k;
        } else if (x == k) {
            seen_k = true;
            cw = cw || seen_j;
        }
    }
    if (label_runs(labels, k) >= 2) {
        throw std::logic_error("last body separates triple " + list_ids({i, j, k}));
    }
    if (!cw && !ccw) {
        throw std::logic_error("triple " + list_ids({i, j, k}) + " has no strong orientation");
    }
    if ((cw && ccw) != (label_runs(labels, j) >= 2)) {
        throw std::logic_error("triple " + list_ids({i, j, k}) +
                               ": both orientations without the middle body separating");
    }
    return cw && ccw ? TripleOrientation::Both
                     : (cw ? TripleOrientation::CwOnly : TripleOrientation::CcwOnly);
}

} // namespace

int label_runs(const std::vector<int>& labels, int body) {
    const std::size_t n = labels.size();
    int runs = 0;
    bool all = n > 0;
    for (std::size_t t = 0; t < n; ++t) {
        all = all && labels[t] == body;
        if (labels[t] == body && labels[(t + n - 1) % n] != body) {
            ++runs;
        }
    }
    return all ? 1 : runs;
}

FamilyReport validate_family(std::vector<ConvexBody> bodies) {
    std::stable_sort(bodies.begin(), bodies.end(), [](const ConvexBody& a, const ConvexBody& b) {
        return a.leftmost().x() < b.leftmost().x();
    });
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        bodies[i].set_id(static_cast<int>(i + 1));
    }
    FamilyReport report;
    const int n = static_cast<int>(bodies.size());
    auto at = [&](int id) -> const ConvexBody& { return bodies[static_cast<std::size_t>(id - 1)]; };

    for (int i = 1; i < n; ++i) {
        if (at(i).leftmost().x() == at(i + 1).leftmost().x()) {
            report.violations.push_back({"duplicate leftmost x", {i, i + 1}});
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const auto common = boundary_intersections(at(i), at(j));
            if (!common || common->size() > 2) {
                report.violations.push_back({"crossing pair", {i, j}});
                continue;
            }
            if (!is_convex_position({at(i), at(j)})) {
                report.violations.push_back({"pair not in convex position", {i, j}});
                continue;
            }
            try {
                hull_owners({&at(i), &at(j)}, {i, j});
            } catch (const DegenerateError& e) {
                report.warnings.push_back("bodies " + list_ids({i, j}) + ": " + e.what());
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                if (!triple_convex(at(i), at(j), at(k))) {
                    report.violations.push_back({"triple not in convex position", {i, j, k}});
                    continue;
                }
                try {
                    hull_owners({&at(i), &at(j), &at(k)}, {i, j, k});
                } catch (const DegenerateError& e) {
                    report.warnings.push_back("bodies " + list_ids({i, j, k}) + ": " + e.what());
                }
            }
        }
    }
    if (report.ok()) {
        ConvexFamily f;
        f.bodies_ = std::move(bodies);
        report.family = std::move(f);
    }
    return report;
}

ConvexFamily make_family(std::vector<ConvexBody> bodies) {
    FamilyReport r = validate_family(std::move(bodies));
    if (!r.ok()) {
        std::string ids;
        for (int id : r.violations[0].bodies) {
            ids += " " + std::to_string(id);
        }
        throw GeometryError(r.violations[0].kind + ":" + ids);
    }
    return std::move(*r.family);
}

std::vector<int> hull_label_sequence(const ConvexFamily& f, int i, int j, int k) {
    const int n = static_cast<int>(f.size());
    if (!(1 <= i && i < j && j < k && k <= n)) {
        throw std::invalid_argument("hull_label_sequence: need 1 <= i < j < k <= N");
    }
    return clockwise_labels({&f.body(i), &f.body(j), &f.body(k)}, {i, j, k});
}

const char* to_string(TripleOrientation o) {
    switch (o) {
    case TripleOrientation::CwOnly:
        return "cw-only";
    case TripleOrientation::CcwOnly:
        return "ccw-only";
    case TripleOrientation::Both:
        return "both";
    }
    return "?";
}

TripleOrientation strong_orientation(const ConvexFamily& f, int i, int j, int k) {
    return classify(hull_label_sequence(f, i, j, k), i, j, k);
}

OrderedColoring color_triples(const ConvexFamily& f, int workers) {
    const auto n = static_cast<Vertex>(f.size());
    std::vector<Color> colors(binomial(n, 3));
    workers = std::max(1, workers);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

    // worker w fills every triple whose last body k has k % workers == w
    auto run = [&](int w) {
        try {
            for (Vertex k = 3 + static_cast<Vertex>(w); k <= n; k += static_cast<Vertex>(workers)) {
                std::uint64_t rank = binomial(k - 1, 3);
                for (Vertex j = 2; j < k; ++j) {
                    for (Vertex i = 1; i < j; ++i) {
                        const auto o = strong_orientation(f, static_cast<int>(i), static_cast<int>(j),
                                                          static_cast<int>(k));
                        colors[rank++] = o == TripleOrientation::CwOnly    ? 1
                                         : o == TripleOrientation::CcwOnly ? 2
                                                                           : 3;
                    }
                }
            }
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    OrderedColoring c(3, 3, n, std::move(colors));
    if (const auto v = is_transitive(c)) {
        std::string ids;
        for (Vertex x : v->tuple) {
            ids += " " + std::to_string(x);
        }
        throw std::logic_error("triple coloring is not transitive at" + ids);
    }
    return c;
}

std::vector<int> find_convex_position(const ConvexFamily& f, int n, int workers) {
    if (n < 0) {
        throw std::invalid_argument("find_convex_position: n must be non-negative");
    }
    if (static_cast<std::size_t>(n) > f.size()) {
        throw NoPathFound("family has fewer than n bodies");
    }
    std::vector<int> ids;
    if (n <= 2) {
        for (int i = 1; i <= n; ++i) {
            ids.push_back(i);
        }
    } else {
        const Clique clique = extract_clique(color_triples(f, workers), n);
        for (Vertex v : clique.vertices) {
            ids.push_back(static_cast<int>(v));
        }
    }
    std::vector<ConvexBody> chosen;
    for (int id : ids) {
        chosen.push_back(f.body(id));
    }
    if (!is_convex_position(chosen)) {
        throw std::logic_error("extracted bodies are not in convex position");
    }
    return ids;
}

namespace {

std::optional<ConvexBody> random_body(Rng& rng, const RandomFamilyOptions& opt) {
    std::uniform_int_distribution<long long> center(0, opt.box);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> corners(3, 6);
    const double cx = static_cast<double>(center(rng));
    const double cy = static_cast<double>(center(rng));
    const double a = static_cast<double>(opt.min_radius) +
                     unit(rng) * static_cast<double>(opt.max_radius - opt.min_radius);
    // a third of the bodies are long and thin, which is what makes a middle
    // body separate a triple
    const double b = unit(rng) < 1.0 / 3 ? a / (3.0 + 5.0 * unit(rng)) : a * (0.5 + 0.5 * unit(rng));
    const double theta = unit(rng) * std::numbers::pi;
    const int m = corners(rng);
    std::vector<double> angles(static_cast<std::size_t>(m));
    for (auto& t : angles) {
        t = unit(rng) * 2 * std::numbers::pi;
    }
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    for (double t : angles) {
        const double ex = a * std::cos(t), ey = b * std::sin(t);
        const double x = cx + ex * std::cos(theta) - ey * std::sin(theta);
        const double y = cy + ex * std::sin(theta) + ey * std::cos(theta);
        pts.emplace_back(std::llround(x), std::llround(y));
    }
    std::vector<Point> hull;
    for (std::size_t i : convex_hull(pts)) {
        hull.push_back(pts[i]);
    }
    if (hull.size() < 3) {
        return std::nullopt;
    }
    try {
        return ConvexBody(std::move(hull));
    } catch (const GeometryError&) {
        return std::nullopt;
    }
}

bool compatible(const std::vector<ConvexBody>& bodies, const ConvexBody& cand) {
    for (const auto& b : bodies) {
        if (b.leftmost().x() == cand.leftmost().x()) {
            return false;
        }
    }
    for (const auto& b : bodies) {
        const auto common = boundary_intersections(b, cand);
        if (!common || common->size() > 2 || !is_convex_position({b, cand})) {
            return false;
        }
        try {
            hull_owners({&b, &cand}, {1, 2});
        } catch (const DegenerateError&) {
            return false;
        }
    }
    for (std::size_t x = 0; x < bodies.size(); ++x) {
        for (std::size_t y = x + 1; y < bodies.size(); ++y) {
            // non-degenerate hull plus three owners is convex position
            try {
                const auto owners = hull_owners({&bodies[x], &bodies[y], &cand}, {1, 2, 3});
                for (int id = 1; id <= 3; ++id) {
                    if (std::find(owners.begin(), owners.end(), id) == owners.end()) {
                        return false;
                    }
                }
            } catch (const DegenerateError&) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

ConvexFamily random_family(int size, std::uint64_t seed, RandomFamilyOptions opt) {
    if (size < 0) {
        throw std::invalid_argument("random_family: negative size");
    }
    Rng rng = make_rng(seed, 0x67656f6d);
    std::vector<ConvexBody> bodies;
    for (int attempt = 0; static_cast<int>(bodies.size()) < size; ++attempt) {
        if (attempt >= opt.max_attempts) {
            throw GeometryError("random_family: gave up after " + std::to_string(opt.max_attempts) +
                                " candidate bodies");
        }
        auto cand = random_body(rng, opt);
        if (cand && compatible(bodies, *cand)) {
            bodies.push_back(std::move(*cand));
        }
    }
    FamilyReport r = validate_family(std::move(bodies));
    if (!r.ok() || !r.warnings.empty()) {
        throw std::logic_error("random_family produced an invalid family");
    }
    return std::move(*r.family);
}

} // namespace monopath
