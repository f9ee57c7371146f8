#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "octapet/geometry2.hpp"
#include "octapet/ivec.hpp"
#include "octapet/rational.hpp"

namespace octapet {

/// Exact rational point in the scaled parameter bundle.
using RVec3 = std::array<Rational, 3>;

/// One face of a convex lattice polytope: the set of vertices on a supporting
/// plane normal . v = offset, with normal primitive and pointing outward
/// (every vertex satisfies normal . v <= offset).
struct Face {
    std::vector<std::size_t> vertex_indices;  // cyclic order, CCW seen from outside
    IVec3 normal;
    std::int64_t offset = 0;
};

/// Integer affine self-map of the scaled bundle: v -> M v + t.
struct AffineMap3 {
    std::array<std::array<std::int64_t, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    IVec3 t;

    IVec3 apply(const IVec3& v) const;
    RVec3 apply(const RVec3& v) const;
    AffineMap3 compose(const AffineMap3& inner) const;  // this after inner
    AffineMap3 inverse() const;                         // requires |det| = 1
};

/// Convex polytope with integer vertices (coordinates scaled by 420).  Faces
/// are enumerated and validated at construction: vertices are deduplicated,
/// no three may be collinear, the polytope must have positive volume, and
/// every vertex must lie on at least three faces.
class ConvexPolytope3 {
public:
    ConvexPolytope3() = default;
    ConvexPolytope3(std::string name, std::vector<IVec3> vertices);

    const std::string& name() const { return name_; }
    const std::vector<IVec3>& vertices() const { return vertices_; }
    const std::vector<Face>& faces() const { return faces_; }
    bool empty() const { return vertices_.empty(); }

    /// Number of faces through each vertex (parallel to vertices()).
    std::vector<int> vertex_face_counts() const;

    /// True iff every face normal, in primitive form, has at least two
    /// coordinates in {-1,0,1} and the third in [-8, 8].
    bool normals_improved() const;

    bool contains(const IVec3& v, bool strict) const;
    bool contains(const RVec3& v, bool strict) const;

    /// 6 x volume, exact (positive for every constructed polytope).
    std::int64_t volume6() const;

    /// Vertex pairs joined by an edge (each pair once, i < j).
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Lexicographically sorted vertex list; equal iff same point set.
    std::vector<IVec3> sorted_vertices() const;

    /// An interior rational point (the vertex average).
    RVec3 interior_point() const;

    std::int64_t min_z() const;
    std::int64_t max_z() const;

    friend bool operator==(const ConvexPolytope3& a, const ConvexPolytope3& b) {
        return a.sorted_vertices() == b.sorted_vertices();
    }

private:
    std::string name_;
    std::vector<IVec3> vertices_;
    std::vector<Face> faces_;
};

/// Builds a polytope from rational vertices that are required to be integral
/// (throws GeometryError otherwise).  Used by the projective maps.
ConvexPolytope3 polytope_from_rational(std::string name, const std::vector<RVec3>& vertices);

/// Vertex-wise image under an integer affine map.
ConvexPolytope3 apply_map(const ConvexPolytope3& p, const AffineMap3& map, std::string name);

/// Vertex-wise image under an arbitrary exact map whose images must be
/// integral (projective maps of the bundle).
ConvexPolytope3 apply_pointwise(const ConvexPolytope3& p, const std::function<RVec3(const IVec3&)>& fn,
                                std::string name);

/// Separating-direction search: the first W in {-10..10}^3 (lexicographic,
/// excluding 0) with max W.p over P <= min W.q over Q, witnessing that the
/// interiors of P and Q are disjoint.  nullopt when no witness exists in the
/// search cube.
std::optional<IVec3> disjoint_witness(const ConvexPolytope3& p, const ConvexPolytope3& q);

/// The part of the polytope between the fibers z = lo and z = hi: vertices in
/// the slab plus edge crossings, which must land on integer points.
ConvexPolytope3 restrict_z(const ConvexPolytope3& p, std::int64_t lo, std::int64_t hi, std::string name);

/// The fiber polygon at height z (exact rational x,y coordinates); empty when
/// the plane misses the polytope.
ConvexPolygon2 slice_at(const ConvexPolytope3& p, const Rational& z);

/// The global rotation iota1 : (x, y, z) -> (-x, -y, z).
AffineMap3 iota1_map();

/// The projective involution of the bundle sending the fiber over s to the
/// fiber over 1/(2s), on 420-scaled points:
///   (X, Y, Z) -> (210 (X+Y) / Z, 210 (X-Y) / Z, 420 * 210 / Z * ... )
/// i.e. exact form (210(X+Y)/Z, 210(X-Y)/Z, 88200/Z).
RVec3 iota2_point(const IVec3& v);

ConvexPolytope3 apply_iota2(const ConvexPolytope3& p, std::string name);

}  // namespace octapet
