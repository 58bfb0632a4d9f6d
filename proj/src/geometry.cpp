#include "monopath/geometry.hpp"

#include "monopath/random.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace monopath {

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 60;

bool small_integer(const Rational& r, std::int64_t& out) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) != 1) {
        return false;
    }
    const auto& n = numerator(r);
    if (n >= kSmallLimit || n <= -kSmallLimit) {
        return false;
    }
    out = n.convert_to<std::int64_t>();
    return true;
}

} // namespace

Point::Point(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
    small_ = small_integer(x_, sx_) && small_integer(y_, sy_);
}

int orient(const Point& a, const Point& b, const Point& c) {
    if (a.small() && b.small() && c.small()) {
        const __int128 d = static_cast<__int128>(b.sx() - a.sx()) * (c.sy() - a.sy()) -
                           static_cast<__int128>(b.sy() - a.sy()) * (c.sx() - a.sx());
        return d > 0 ? 1 : (d < 0 ? -1 : 0);
    }
    return boost::multiprecision::sign((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

std::vector<std::size_t> convex_hull(const std::vector<Point>& pts) {
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    if (idx.size() < 3) {
        return idx;
    }
    // monotone chain; pop on non-left turns so collinear points are dropped
    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t m = 0;
    for (std::size_t i : idx) {
        while (m >= 2 && orient(pts[hull[m - 2]], pts[hull[m - 1]], pts[i]) <= 0) {
            --m;
        }
        hull[m++] = i;
    }
    const std::size_t lower = m + 1;
    for (std::size_t t = idx.size() - 1; t-- > 0;) {
        const std::size_t i = idx[t];
        while (m >= lower && orient(pts[hull[m - 2]], pts[hull[m - 1]], pts[i]) <= 0) {
            --m;
        }
        hull[m++] = i;
    }
    hull.resize(m - 1);
    return hull;
}

namespace {

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orient(a, b, p) != 0) {
        return false;
    }
    const Point& lo = std::min(a, b);
    const Point& hi = std::max(a, b);
    return !(p < lo) && !(hi < p);
}

} // namespace

bool in_convex_polygon(const std::vector<Point>& ccw, const Point& p) {
    if (ccw.size() == 1) {
        return ccw[0] == p;
    }
    if (ccw.size() == 2) {
        return on_segment(ccw[0], ccw[1], p);
    }
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        if (orient(ccw[i], ccw[(i + 1) % ccw.size()], p) < 0) {
            return false;
        }
    }
    return !ccw.empty();
}

bool strictly_inside_convex_polygon(const std::vector<Point>& ccw, const Point& p) {
    if (ccw.size() < 3) {
        return false;
    }
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        if (orient(ccw[i], ccw[(i + 1) % ccw.size()], p) <= 0) {
            return false;
        }
    }
    return true;
}

ConvexBody::ConvexBody(std::vector<Point> vertices, int id) : id_(id) {
    const std::size_t m = vertices.size();
    if (m < 3) {
        throw GeometryError("convex body needs at least 3 vertices");
    }
    const auto hull = convex_hull(vertices);
    if (hull.size() != m) {
        throw GeometryError("vertices are not in strictly convex position");
    }
    // the input must list the hull cyclically, in either direction
    const std::size_t start = hull[0];
    bool forward = true;
    bool backward = true;
    for (std::size_t t = 0; t < m; ++t) {
        forward = forward && hull[t] == (start + t) % m;
        backward = backward && hull[t] == (start + m - t) % m;
    }
    if (!forward && !backward) {
        throw GeometryError("vertices are not listed in cyclic order");
    }
    vertices_.reserve(m);
    for (std::size_t i : hull) {
        vertices_.push_back(std::move(vertices[i]));
    }
    if (vertices_[1].x() == vertices_[0].x() || vertices_.back().x() == vertices_[0].x()) {
        throw GeometryError("leftmost vertex is not unique");
    }
}

namespace {

// Appends the common points of segments pq and rs; false on a shared
// subsegment.
bool segment_intersection(const Point& p, const Point& q, const Point& r, const Point& s,
                          std::vector<Point>& out) {
    const int o1 = orient(p, q, r);
    const int o2 = orient(p, q, s);
    const int o3 = orient(r, s, p);
    const int o4 = orient(r, s, q);
    if (o1 == 0 && o2 == 0) {
        const Point& a_lo = std::min(p, q);
        const Point& a_hi = std::max(p, q);
        const Point& b_lo = std::min(r, s);
        const Point& b_hi = std::max(r, s);
        const Point& lo = std::max(a_lo, b_lo);
        const Point& hi = std::min(a_hi, b_hi);
        if (hi < lo) {
            return true;
        }
        if (lo == hi) {
            out.push_back(lo);
            return true;
        }
        return false;
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) {
        return true;
    }
    if (o1 == 0) {
        out.push_back(r);
    } else if (o2 == 0) {
        out.push_back(s);
    } else if (o3 == 0) {
        out.push_back(p);
    } else if (o4 == 0) {
        out.push_back(q);
    } else {
        // proper crossing: p + t (q - p)
        const Rational dx1 = q.x() - p.x(), dy1 = q.y() - p.y();
        const Rational dx2 = s.x() - r.x(), dy2 = s.y() - r.y();
        const Rational den = dx1 * dy2 - dy1 * dx2;
        const Rational t = ((r.x() - p.x()) * dy2 - (r.y() - p.y()) * dx2) / den;
        out.emplace_back(p.x() + t * dx1, p.y() + t * dy1);
    }
    return true;
}

} // namespace

std::optional<std::vector<Point>> boundary_intersections(const ConvexBody& a,
                                                         const ConvexBody& b) {
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    std::vector<Point> pts;
    for (std::size_t i = 0; i < va.size(); ++i) {
        const Point& p = va[i];
        const Point& q = va[(i + 1) % va.size()];
        for (std::size_t j = 0; j < vb.size(); ++j) {
            if (!segment_intersection(p, q, vb[j], vb[(j + 1) % vb.size()], pts)) {
                return std::nullopt;
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool is_convex_position(const std::vector<ConvexBody>& bodies) {
    if (bodies.size() <= 1) {
        return true;
    }
    for (std::size_t b = 0; b < bodies.size(); ++b) {
        std::vector<Point> others;
        for (std::size_t o = 0; o < bodies.size(); ++o) {
            if (o != b) {
                others.insert(others.end(), bodies[o].vertices().begin(), bodies[o].vertices().end());
            }
        }
        std::vector<Point> hull;
        for (std::size_t i : convex_hull(others)) {
            hull.push_back(others[i]);
        }
        const auto& vs = bodies[b].vertices();
        const bool sticks_out = std::any_of(vs.begin(), vs.end(), [&](const Point& p) {
            return !in_convex_polygon(hull, p);
        });
        if (!sticks_out) {
            return false;
        }
    }
    return true;
}

Rational parse_rational(const std::string& tok) {
    auto bad = [&]() { return FormatError("malformed coordinate: '" + tok + "'"); };
    if (tok.empty()) {
        throw bad();
    }
    const auto slash = tok.find('/');
    try {
        if (slash != std::string::npos) {
            using boost::multiprecision::cpp_int;
            const std::string num = tok.substr(0, slash);
            const std::string den = tok.substr(slash + 1);
            auto digits_only = [](const std::string& s, bool allow_sign) {
                std::size_t i = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
                if (i >= s.size()) {
                    return false;
                }
                for (; i < s.size(); ++i) {
                    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                        return false;
                    }
                }
                return true;
            };
            if (!digits_only(num, true) || !digits_only(den, false)) {
                throw bad();
            }
            const cpp_int d(den);
            if (d == 0) {
                throw bad();
            }
            return Rational(cpp_int(num[0] == '+' ? num.substr(1) : num), d);
        }
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }

    // [sign] digits [. digits] [(e|E) [sign] digits]
    std::size_t i = 0;
    bool negative = false;
    if (tok[i] == '+' || tok[i] == '-') {
        negative = tok[i] == '-';
        ++i;
    }
    boost::multiprecision::cpp_int mant = 0;
    long long scale = 0;
    bool any_digit = false;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
        mant = mant * 10 + (tok[i] - '0');
        any_digit = true;
        ++i;
    }
    if (i < tok.size() && tok[i] == '.') {
        ++i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
            mant = mant * 10 + (tok[i] - '0');
            --scale;
            any_digit = true;
            ++i;
        }
    }
    if (!any_digit) {
        throw bad();
    }
    if (i < tok.size() && (tok[i] == 'e' || tok[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) {
            exp_negative = tok[i] == '-';
            ++i;
        }
        long long e = 0;
        bool exp_digit = false;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
            e = e * 10 + (tok[i] - '0');
            if (e > 100000) {
                throw bad();
            }
            exp_digit = true;
            ++i;
        }
        if (!exp_digit) {
            throw bad();
        }
        scale += exp_negative ? -e : e;
    }
    if (i != tok.size()) {
        throw bad();
    }
    Rational r(mant);
    boost::multiprecision::cpp_int p10 = boost::multiprecision::pow(
        boost::multiprecision::cpp_int(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
    r = scale < 0 ? r / Rational(p10) : r * Rational(p10);
    return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    cpp_int den = denominator(r);
    if (den == 1) {
        return numerator(r).str();
    }
    // exact decimal iff the denominator is 2^a 5^b
    unsigned twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) {
        return numerator(r).str() + "/" + denominator(r).str();
    }
    const unsigned digits = std::max(twos, fives);
    cpp_int scaled = numerator(r) * boost::multiprecision::pow(cpp_int(10), digits) / denominator(r);
    const bool negative = scaled < 0;
    std::string s = (negative ? cpp_int(-scaled) : scaled).str();
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

std::vector<ConvexBody> read_bodies(std::istream& in) {
    std::vector<ConvexBody> bodies;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(lineno) + ": ";
        std::size_t used = 0;
        long long m = 0;
        try {
            m = std::stoll(toks[0], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != toks[0].size() || m < 3) {
            throw FormatError(where + "malformed vertex count '" + toks[0] + "'");
        }
        if (toks.size() != static_cast<std::size_t>(1 + 2 * m)) {
            throw FormatError(where + "expected " + std::to_string(2 * m) + " coordinates, got " +
                              std::to_string(toks.size() - 1));
        }
        std::vector<Point> pts;
        for (long long v = 0; v < m; ++v) {
            pts.emplace_back(parse_rational(toks[static_cast<std::size_t>(1 + 2 * v)]),
                             parse_rational(toks[static_cast<std::size_t>(2 + 2 * v)]));
        }
        try {
            bodies.emplace_back(std::move(pts));
        } catch (const GeometryError& e) {
            throw GeometryError(where + e.what());
        }
    }
    return bodies;
}

void write_bodies(const std::vector<ConvexBody>& bodies, std::ostream& out) {
    for (const auto& b : bodies) {
        out << b.vertices().size();
        for (const auto& p : b.vertices()) {
            out << ' ' << format_rational(p.x()) << ' ' << format_rational(p.y());
        }
        out << '\n';
    }
}

std::vector<ConvexBody> perturb(const std::vector<ConvexBody>& bodies, const Rational& eps,
                                std::uint64_t seed) {
    constexpr int kSteps = 1024;
    Rng rng = make_rng(seed, 0x70657274);
    std::uniform_int_distribution<int> offset(-kSteps, kSteps);
    const Rational unit = eps / kSteps;
    std::vector<ConvexBody> out;
    out.reserve(bodies.size());
    for (const auto& b : bodies) {
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            std::vector<Point> pts;
            for (const auto& p : b.vertices()) {
                pts.emplace_back(p.x() + unit * offset(rng), p.y() + unit * offset(rng));
            }
            try {
                out.emplace_back(std::move(pts), b.id());
                done = true;
            } catch (const GeometryError&) {
            }
        }
        if (!done) {
            throw GeometryError("perturbation keeps breaking convexity; use a smaller epsilon");
        }
    }
    return out;
}

} // namespace monopath
