#include "octapet/geometry2.hpp"

#include <algorithm>

namespace octapet {

namespace {

/// Removes consecutive duplicates and collinear middle vertices from a cyclic
/// list.  Returns an empty list when fewer than 3 distinct extreme points
/// remain (degenerate = empty set for our purposes).
std::vector<Point2> simplify_cycle(std::vector<Point2> v) {
    // Drop consecutive duplicates.
    std::vector<Point2> w;
    for (const auto& p : v) {
        if (w.empty() || !(w.back() == p)) w.push_back(p);
    }
    while (w.size() > 1 && w.front() == w.back()) w.pop_back();
    if (w.size() < 3) return {};

    // Drop collinear middle vertices (keep only strict turns).
    std::vector<Point2> out;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = w[(i + n - 1) % n];
        const Point2& b = w[i];
        const Point2& c = w[(i + 1) % n];
        if (!cross(b - a, c - b).is_zero()) out.push_back(b);
    }
    if (out.size() < 3) return {};
    return out;
}

Rational signed_area2(const std::vector<Point2>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += cross(v[i], v[(i + 1) % v.size()]);
    }
    return s;
}

}  // namespace

ConvexPolygon2::ConvexPolygon2(std::vector<Point2> vertices) {
    auto v = simplify_cycle(std::move(vertices));
    if (v.empty()) return;
    if (signed_area2(v) < Rational(0)) std::reverse(v.begin(), v.end());
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % n];
        const Point2& c = v[(i + 2) % n];
        if (cross(b - a, c - b).sign() <= 0) {
            throw GeometryError("ConvexPolygon2: vertex cycle is not convex");
        }
    }
    vertices_ = std::move(v);
}

Rational ConvexPolygon2::area() const {
    if (empty()) return Rational(0);
    return signed_area2(vertices_) / Rational(2);
}

Point2 ConvexPolygon2::centroid() const {
    if (empty()) throw GeometryError("centroid of empty polygon");
    Point2 s{0, 0};
    for (const auto& p : vertices_) s = s + p;
    const Rational n(static_cast<std::int64_t>(vertices_.size()));
    return {s.x / n, s.y / n};
}

bool ConvexPolygon2::contains(const Point2& p, bool strict) const {
    if (empty()) return false;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational side = cross(vertices_[(i + 1) % n] - vertices_[i], p - vertices_[i]);
        if (strict ? side.sign() <= 0 : side.sign() < 0) return false;
    }
    return true;
}

ConvexPolygon2 ConvexPolygon2::clip(const HalfPlane& h) const {
    if (empty()) return {};
    std::vector<Point2> out;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        const Rational fa = h.eval(a);
        const Rational fb = h.eval(b);
        if (fa.sign() <= 0) out.push_back(a);
        if ((fa.sign() < 0 && fb.sign() > 0) || (fa.sign() > 0 && fb.sign() < 0)) {
            // Exact edge/boundary intersection: a + t (b-a) with t = fa/(fa-fb).
            const Rational t = fa / (fa - fb);
            out.push_back(a + t * (b - a));
        }
    }
    return ConvexPolygon2(std::move(out));
}

ConvexPolygon2 ConvexPolygon2::intersect(const ConvexPolygon2& other) const {
    ConvexPolygon2 r = *this;
    for (const auto& e : other.edges()) {
        r = r.clip(e);
        if (r.empty()) break;
    }
    return r;
}

std::vector<HalfPlane> ConvexPolygon2::edges() const {
    std::vector<HalfPlane> hs;
    const std::size_t n = vertices_.size();
    hs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        // Interior is to the left of a->b; outward normal is (dy, -dx).
        const Point2 nrm{b.y - a.y, a.x - b.x};
        hs.push_back({nrm, dot(nrm, a)});
    }
    return hs;
}

std::vector<ConvexPolygon2> ConvexPolygon2::subtract(const ConvexPolygon2& other) const {
    if (empty()) return {};
    if (other.empty()) return {*this};
    std::vector<ConvexPolygon2> out;
    ConvexPolygon2 rest = *this;  // part not yet split off, shrinks edge by edge
    for (const auto& e : other.edges()) {
        // Slab strictly outside this supporting edge of `other`.
        const ConvexPolygon2 outside = rest.clip({-e.n, -e.c});
        if (!outside.empty()) out.push_back(outside);
        rest = rest.clip(e);
        if (rest.empty()) break;
    }
    // Whatever remains of `rest` lies inside every edge of other, i.e. in the
    // intersection, and is discarded.
    return out;
}

ConvexPolygon2 ConvexPolygon2::translated(const Point2& v) const {
    std::vector<Point2> w = vertices_;
    for (auto& p : w) p = p + v;
    ConvexPolygon2 r;
    r.vertices_ = std::move(w);  // translation preserves CCW/convexity
    return r;
}

ConvexPolygon2 ConvexPolygon2::mapped(const Rational& a, const Rational& b, const Rational& c,
                                      const Rational& d) const {
    if ((a * d - b * c).is_zero()) throw GeometryError("mapped: singular linear map");
    std::vector<Point2> w;
    w.reserve(vertices_.size());
    for (const auto& p : vertices_) w.push_back({a * p.x + b * p.y, c * p.x + d * p.y});
    return ConvexPolygon2(std::move(w));
}

std::vector<Point2> ConvexPolygon2::translation_canonical() const {
    if (empty()) return {};
    const std::size_t n = vertices_.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (vertices_[i] < vertices_[best]) best = i;
    }
    std::vector<Point2> out;
    out.reserve(n);
    const Point2 base = vertices_[best];
    for (std::size_t i = 0; i < n; ++i) out.push_back(vertices_[(best + i) % n] - base);
    return out;
}

bool operator==(const ConvexPolygon2& a, const ConvexPolygon2& b) {
    if (a.vertices_.size() != b.vertices_.size()) return false;
    if (a.empty()) return true;
    // Same cyclic CCW sequence up to rotation; anchor at the lexicographic min.
    auto ca = a.translation_canonical();
    auto cb = b.translation_canonical();
    if (!(ca == cb)) return false;
    // Same shape; equal sets iff the anchors coincide.
    const auto amin = *std::min_element(a.vertices_.begin(), a.vertices_.end());
    const auto bmin = *std::min_element(b.vertices_.begin(), b.vertices_.end());
    return amin == bmin;
}

ConvexPolygon2 convex_hull(std::vector<Point2> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) return {};
    auto build = [&](auto begin, auto end) {
        std::vector<Point2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross(chain.back() - chain[chain.size() - 2], *it - chain.back()).sign() <= 0) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Point2> lower = build(points.begin(), points.end());
    std::vector<Point2> upper = build(points.rbegin(), points.rend());
    lower.insert(lower.end(), upper.begin() + 1, upper.end() - 1);
    return ConvexPolygon2(std::move(lower));
}

Region2::Region2(ConvexPolygon2 p) {
    if (!p.empty()) parts_.push_back(std::move(p));
}

Rational Region2::area() const {
    Rational s = 0;
    for (const auto& p : parts_) s += p.area();
    return s;
}

void Region2::subtract(const ConvexPolygon2& p) {
    if (p.empty()) return;
    std::vector<ConvexPolygon2> next;
    for (const auto& part : parts_) {
        auto pieces = part.subtract(p);
        for (auto& piece : pieces) next.push_back(std::move(piece));
    }
    parts_ = std::move(next);
}

}  // namespace octapet
