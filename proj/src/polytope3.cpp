#include "octapet/polytope3.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "octapet/errors.hpp"

namespace octapet {

IVec3 AffineMap3::apply(const IVec3& v) const {
    IVec3 out;
    out.x = checked_add(checked_add(checked_mul(m[0][0], v.x), checked_mul(m[0][1], v.y)),
                        checked_add(checked_mul(m[0][2], v.z), t.x));
    out.y = checked_add(checked_add(checked_mul(m[1][0], v.x), checked_mul(m[1][1], v.y)),
                        checked_add(checked_mul(m[1][2], v.z), t.y));
    out.z = checked_add(checked_add(checked_mul(m[2][0], v.x), checked_mul(m[2][1], v.y)),
                        checked_add(checked_mul(m[2][2], v.z), t.z));
    return out;
}

RVec3 AffineMap3::apply(const RVec3& v) const {
    RVec3 out;
    for (int r = 0; r < 3; ++r) {
        out[r] = Rational(m[r][0]) * v[0] + Rational(m[r][1]) * v[1] + Rational(m[r][2]) * v[2];
    }
    out[0] += Rational(t.x);
    out[1] += Rational(t.y);
    out[2] += Rational(t.z);
    return out;
}

AffineMap3 AffineMap3::compose(const AffineMap3& inner) const {
    AffineMap3 out;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            out.m[r][c] = 0;
            for (int k = 0; k < 3; ++k) {
                out.m[r][c] = checked_add(out.m[r][c], checked_mul(m[r][k], inner.m[k][c]));
            }
        }
    }
    out.t = apply(inner.t);
    return out;
}

AffineMap3 AffineMap3::inverse() const {
    const auto& a = m;
    std::int64_t det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (det != 1 && det != -1) throw GeometryError("AffineMap3::inverse: determinant is not a unit");
    AffineMap3 inv;
    inv.m[0][0] = det * (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
    inv.m[0][1] = det * (a[0][2] * a[2][1] - a[0][1] * a[2][2]);
    inv.m[0][2] = det * (a[0][1] * a[1][2] - a[0][2] * a[1][1]);
    inv.m[1][0] = det * (a[1][2] * a[2][0] - a[1][0] * a[2][2]);
    inv.m[1][1] = det * (a[0][0] * a[2][2] - a[0][2] * a[2][0]);
    inv.m[1][2] = det * (a[0][2] * a[1][0] - a[0][0] * a[1][2]);
    inv.m[2][0] = det * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    inv.m[2][1] = det * (a[0][1] * a[2][0] - a[0][0] * a[2][1]);
    inv.m[2][2] = det * (a[0][0] * a[1][1] - a[0][1] * a[1][0]);
    IVec3 mt{-t.x, -t.y, -t.z};
    IVec3 shift = mt;
    shift.x = inv.m[0][0] * mt.x + inv.m[0][1] * mt.y + inv.m[0][2] * mt.z;
    shift.y = inv.m[1][0] * mt.x + inv.m[1][1] * mt.y + inv.m[1][2] * mt.z;
    shift.z = inv.m[2][0] * mt.x + inv.m[2][1] * mt.y + inv.m[2][2] * mt.z;
    inv.t = shift;
    return inv;
}

namespace {

IVec3 primitive(IVec3 n) {
    std::int64_t g = gcd64(gcd64(n.x, n.y), n.z);
    if (g > 1) n = divide_exact(n, g);
    return n;
}

struct PlaneKey {
    IVec3 n;
    std::int64_t d;

    friend bool operator<(const PlaneKey& a, const PlaneKey& b) {
        if (!(a.n == b.n)) return a.n < b.n;
        return a.d < b.d;
    }
};

/// Exact angular order of in-plane vectors around the outward normal n,
/// starting at the direction of r0.
struct AngularLess {
    IVec3 n;
    IVec3 r0;

    int half(const IVec3& r) const {
        std::int64_t cr = dot(n, cross(r0, r));
        if (cr != 0) return cr > 0 ? 0 : 1;
        return dot(r0, r) > 0 ? 0 : 1;
    }

    bool operator()(const std::pair<IVec3, std::size_t>& a, const std::pair<IVec3, std::size_t>& b) const {
        int ha = half(a.first), hb = half(b.first);
        if (ha != hb) return ha < hb;
        return dot(n, cross(a.first, b.first)) > 0;
    }
};

}  // namespace

ConvexPolytope3::ConvexPolytope3(std::string name, std::vector<IVec3> vertices) : name_(std::move(name)) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    vertices_ = std::move(vertices);
    const std::size_t n = vertices_.size();
    if (n < 4) throw GeometryError(name_ + ": fewer than 4 distinct vertices");

    // No three vertices may be collinear.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                IVec3 c = cross(vertices_[j] - vertices_[i], vertices_[k] - vertices_[i]);
                if (c == IVec3{}) {
                    throw GeometryError(name_ + ": collinear vertices " + vertices_[i].str() + " " +
                                        vertices_[j].str() + " " + vertices_[k].str());
                }
            }
        }
    }

    // Supporting planes from vertex triples; keep those with all vertices on
    // one side, normal oriented outward.
    std::map<PlaneKey, std::set<std::size_t>> planes;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                IVec3 norm = primitive(cross(vertices_[j] - vertices_[i], vertices_[k] - vertices_[i]));
                std::int64_t d = dot(norm, vertices_[i]);
                bool any_above = false, any_below = false;
                for (const IVec3& v : vertices_) {
                    std::int64_t side = checked_sub(dot(norm, v), d);
                    if (side > 0) any_above = true;
                    if (side < 0) any_below = true;
                }
                if (any_above && any_below) continue;
                if (any_above) {
                    norm = -norm;
                    d = -d;
                }
                if (!any_above && !any_below) throw GeometryError(name_ + ": degenerate flat polytope");
                auto& members = planes[{norm, d}];
                for (std::size_t v = 0; v < n; ++v) {
                    if (dot(norm, vertices_[v]) == d) members.insert(v);
                }
            }
        }
    }

    for (const auto& [key, members] : planes) {
        Face face;
        face.normal = key.n;
        face.offset = key.d;
        // Cyclic order around the outward normal.
        IVec3 centroid_scaled{};
        for (std::size_t idx : members) centroid_scaled = centroid_scaled + vertices_[idx];
        const std::int64_t count = static_cast<std::int64_t>(members.size());
        std::vector<std::pair<IVec3, std::size_t>> radial;
        for (std::size_t idx : members) {
            radial.emplace_back(count * vertices_[idx] - centroid_scaled, idx);
        }
        std::sort(radial.begin() + 1, radial.end(), AngularLess{key.n, radial.front().first});
        for (const auto& [r, idx] : radial) face.vertex_indices.push_back(idx);
        faces_.push_back(std::move(face));
    }

    std::vector<int> counts = vertex_face_counts();
    for (std::size_t v = 0; v < n; ++v) {
        if (counts[v] < 3) throw GeometryError(name_ + ": vertex " + vertices_[v].str() + " lies in fewer than 3 faces");
    }
    if (volume6() <= 0) throw GeometryError(name_ + ": nonpositive volume");
}

std::vector<int> ConvexPolytope3::vertex_face_counts() const {
    std::vector<int> counts(vertices_.size(), 0);
    for (const Face& f : faces_) {
        for (std::size_t idx : f.vertex_indices) ++counts[idx];
    }
    return counts;
}

bool ConvexPolytope3::normals_improved() const {
    for (const Face& f : faces_) {
        int small = 0;
        std::int64_t big = 0;
        for (std::int64_t c : {f.normal.x, f.normal.y, f.normal.z}) {
            if (c >= -1 && c <= 1) {
                ++small;
            } else {
                big = c;
            }
        }
        if (small < 2) return false;
        if (small == 2 && (big < -8 || big > 8)) return false;
    }
    return true;
}

bool ConvexPolytope3::contains(const IVec3& v, bool strict) const {
    for (const Face& f : faces_) {
        std::int64_t side = checked_sub(dot(f.normal, v), f.offset);
        if (side > 0 || (strict && side == 0)) return false;
    }
    return true;
}

bool ConvexPolytope3::contains(const RVec3& v, bool strict) const {
    for (const Face& f : faces_) {
        Rational side = Rational(f.normal.x) * v[0] + Rational(f.normal.y) * v[1] + Rational(f.normal.z) * v[2] -
                        Rational(f.offset);
        int sign = side.sign();
        if (sign > 0 || (strict && sign == 0)) return false;
    }
    return true;
}

std::int64_t ConvexPolytope3::volume6() const {
    std::int64_t total = 0;
    for (const Face& f : faces_) {
        const auto& idx = f.vertex_indices;
        const IVec3& a = vertices_[idx[0]];
        for (std::size_t i = 1; i + 1 < idx.size(); ++i) {
            const IVec3& b = vertices_[idx[i]];
            const IVec3& c = vertices_[idx[i + 1]];
            total = checked_add(total, dot(a, cross(b, c)));
        }
    }
    return total;
}

std::vector<std::pair<std::size_t, std::size_t>> ConvexPolytope3::edges() const {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const Face& f : faces_) {
        const auto& idx = f.vertex_indices;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            std::size_t a = idx[i], b = idx[(i + 1) % idx.size()];
            out.insert({std::min(a, b), std::max(a, b)});
        }
    }
    return {out.begin(), out.end()};
}

std::vector<IVec3> ConvexPolytope3::sorted_vertices() const { return vertices_; }

RVec3 ConvexPolytope3::interior_point() const {
    IVec3 sum{};
    for (const IVec3& v : vertices_) sum = sum + v;
    Rational n(static_cast<std::int64_t>(vertices_.size()));
    return {Rational(sum.x) / n, Rational(sum.y) / n, Rational(sum.z) / n};
}

std::int64_t ConvexPolytope3::min_z() const {
    std::int64_t z = vertices_.front().z;
    for (const IVec3& v : vertices_) z = std::min(z, v.z);
    return z;
}

std::int64_t ConvexPolytope3::max_z() const {
    std::int64_t z = vertices_.front().z;
    for (const IVec3& v : vertices_) z = std::max(z, v.z);
    return z;
}

ConvexPolytope3 polytope_from_rational(std::string name, const std::vector<RVec3>& vertices) {
    std::vector<IVec3> out;
    out.reserve(vertices.size());
    for (const RVec3& v : vertices) {
        for (const Rational& c : v) {
            if (!c.is_integer()) {
                throw GeometryError(name + ": non-integral image vertex coordinate " + c.str());
            }
        }
        out.push_back({static_cast<std::int64_t>(v[0].num().get_si()), static_cast<std::int64_t>(v[1].num().get_si()),
                       static_cast<std::int64_t>(v[2].num().get_si())});
    }
    return ConvexPolytope3(std::move(name), std::move(out));
}

ConvexPolytope3 apply_map(const ConvexPolytope3& p, const AffineMap3& map, std::string name) {
    std::vector<IVec3> out;
    out.reserve(p.vertices().size());
    for (const IVec3& v : p.vertices()) out.push_back(map.apply(v));
    return ConvexPolytope3(std::move(name), std::move(out));
}

ConvexPolytope3 apply_pointwise(const ConvexPolytope3& p, const std::function<RVec3(const IVec3&)>& fn,
                                std::string name) {
    std::vector<RVec3> out;
    out.reserve(p.vertices().size());
    for (const IVec3& v : p.vertices()) out.push_back(fn(v));
    return polytope_from_rational(std::move(name), out);
}

std::optional<IVec3> disjoint_witness(const ConvexPolytope3& p, const ConvexPolytope3& q) {
    for (std::int64_t x = -10; x <= 10; ++x) {
        for (std::int64_t y = -10; y <= 10; ++y) {
            for (std::int64_t z = -10; z <= 10; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                IVec3 w{x, y, z};
                std::int64_t max_p = dot(w, p.vertices().front());
                for (const IVec3& v : p.vertices()) max_p = std::max(max_p, dot(w, v));
                std::int64_t min_q = dot(w, q.vertices().front());
                for (const IVec3& v : q.vertices()) min_q = std::min(min_q, dot(w, v));
                if (max_p <= min_q) return w;
            }
        }
    }
    return std::nullopt;
}

ConvexPolytope3 restrict_z(const ConvexPolytope3& p, std::int64_t lo, std::int64_t hi, std::string name) {
    std::vector<IVec3> out;
    for (const IVec3& v : p.vertices()) {
        if (v.z >= lo && v.z <= hi) out.push_back(v);
    }
    auto cut = [&](const IVec3& a, const IVec3& b, std::int64_t plane) {
        if ((a.z - plane) * (b.z - plane) < 0) {
            std::int64_t dz = b.z - a.z;
            // a + (plane - a.z)/dz * (b - a) must be integral.
            IVec3 d = b - a;
            std::int64_t k = plane - a.z;
            out.push_back({checked_add(a.x, divide_exact(checked_mul(k, d.x), dz)),
                           checked_add(a.y, divide_exact(checked_mul(k, d.y), dz)), plane});
        }
    };
    for (const auto& [i, j] : p.edges()) {
        cut(p.vertices()[i], p.vertices()[j], lo);
        cut(p.vertices()[i], p.vertices()[j], hi);
    }
    return ConvexPolytope3(std::move(name), std::move(out));
}

ConvexPolygon2 slice_at(const ConvexPolytope3& p, const Rational& z) {
    std::vector<Point2> points;
    for (const IVec3& v : p.vertices()) {
        if (Rational(v.z) == z) points.push_back({Rational(v.x), Rational(v.y)});
    }
    for (const auto& [i, j] : p.edges()) {
        const IVec3& a = p.vertices()[i];
        const IVec3& b = p.vertices()[j];
        Rational za(a.z), zb(b.z);
        if ((za < z && z < zb) || (zb < z && z < za)) {
            Rational t = (z - za) / (zb - za);
            points.push_back({Rational(a.x) + t * Rational(b.x - a.x), Rational(a.y) + t * Rational(b.y - a.y)});
        }
    }
    return convex_hull(std::move(points));
}

AffineMap3 iota1_map() {
    AffineMap3 map;
    map.m = {{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
    return map;
}

RVec3 iota2_point(const IVec3& v) {
    if (v.z <= 0) throw GeometryError("iota2: nonpositive fiber coordinate");
    Rational z(v.z);
    return {Rational(210) * (Rational(v.x) + Rational(v.y)) / z, Rational(210) * (Rational(v.x) - Rational(v.y)) / z,
            Rational(88200) / z};
}

ConvexPolytope3 apply_iota2(const ConvexPolytope3& p, std::string name) {
    return apply_pointwise(p, iota2_point, std::move(name));
}

}  // namespace octapet
