#pragma once

#include <optional>
#include <vector>

#include "octapet/rational.hpp"

namespace octapet {

/// Closed half-plane { p : n·p <= c }.
struct HalfPlane {
    Point2 n;
    Rational c;

    /// n·p - c: negative inside, zero on boundary, positive outside.
    Rational eval(const Point2& p) const { return dot(n, p) - c; }
};

/// Convex polygon with exact rational vertices, stored counter-clockwise with
/// no repeated and no collinear vertices.  The empty polygon (no vertices)
/// represents the empty set; all constructors collapse zero-area input to it.
class ConvexPolygon2 {
public:
    ConvexPolygon2() = default;

    /// Builds from an arbitrary cyclic vertex list.  Orientation is fixed to
    /// CCW, duplicate/collinear vertices are removed, and strict convexity is
    /// verified (throws GeometryError on a genuinely non-convex cycle).
    explicit ConvexPolygon2(std::vector<Point2> vertices);

    bool empty() const { return vertices_.empty(); }
    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    /// Exact area (shoelace / 2); zero for the empty polygon.
    Rational area() const;

    /// Vertex average; interior for any nonempty convex polygon.
    Point2 centroid() const;

    /// strict=true tests the open interior, strict=false the closed polygon.
    bool contains(const Point2& p, bool strict) const;

    /// Intersection with a closed half-plane (one Sutherland-Hodgman pass).
    ConvexPolygon2 clip(const HalfPlane& h) const;

    /// Intersection with another convex polygon (clip against all its edges).
    ConvexPolygon2 intersect(const ConvexPolygon2& other) const;

    /// Set difference this \ other, as a disjoint list of convex polygons
    /// (classic convex decomposition: successive outside slabs of other's
    /// supporting half-planes).
    std::vector<ConvexPolygon2> subtract(const ConvexPolygon2& other) const;

    /// Supporting half-planes, one per edge, interior on the <= side.
    std::vector<HalfPlane> edges() const;

    ConvexPolygon2 translated(const Point2& v) const;

    /// Image under p -> M p with M = [[a,b],[c,d]]; flips orientation back to
    /// CCW automatically when det < 0.  M must be invertible.
    ConvexPolygon2 mapped(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const;

    /// Translation-canonical form: vertices shifted so the lexicographically
    /// smallest vertex is at the origin, listed CCW starting from it.  Two
    /// polygons are translates of one another iff their canonical forms are
    /// equal.
    std::vector<Point2> translation_canonical() const;

    /// Exact equality as point sets.
    friend bool operator==(const ConvexPolygon2& a, const ConvexPolygon2& b);

private:
    std::vector<Point2> vertices_;
};

/// Convex hull of an arbitrary exact point cloud (monotone chain); collapses
/// to the empty polygon when the points span no area.
ConvexPolygon2 convex_hull(std::vector<Point2> points);

/// Finite union of disjoint convex polygons; supports exact subtraction.
/// Used to track the uncovered part of a domain while a tiling is assembled.
class Region2 {
public:
    Region2() = default;
    explicit Region2(ConvexPolygon2 p);

    bool empty() const { return parts_.empty(); }
    const std::vector<ConvexPolygon2>& parts() const { return parts_; }

    Rational area() const;

    /// Removes a convex polygon from the region (exact set subtraction).
    void subtract(const ConvexPolygon2& p);

private:
    std::vector<ConvexPolygon2> parts_;
};

}  // namespace octapet
