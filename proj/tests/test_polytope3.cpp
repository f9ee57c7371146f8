#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <vector>

#include "json.hpp"
#include "octapet/polytope3.hpp"

using namespace octapet;

namespace {

ConvexPolytope3 cube420() {
    std::vector<IVec3> v;
    for (int x : {0, 420})
        for (int y : {0, 420})
            for (int z : {0, 420}) v.push_back({x, y, z});
    return ConvexPolytope3("cube", v);
}

ConvexPolytope3 load_bundle() {
    std::ifstream in(std::string(FIXTURES_DIR) + "/aux.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    std::vector<IVec3> v;
    for (const auto& row : j["polytopes"]["bundle"]) {
        v.push_back({row[0].get<std::int64_t>(), row[1].get<std::int64_t>(), row[2].get<std::int64_t>()});
    }
    return ConvexPolytope3("bundle", v);
}

}  // namespace

TEST_CASE("cube structure") {
    ConvexPolytope3 c = cube420();
    CHECK(c.vertices().size() == 8);
    CHECK(c.faces().size() == 6);
    for (int n : c.vertex_face_counts()) CHECK(n == 3);
    CHECK(c.volume6() == 444528000);  // 6 * 420^3
    CHECK(c.edges().size() == 12);
    CHECK(c.normals_improved());
}

TEST_CASE("unit tetrahedron volume") {
    ConvexPolytope3 t("tet", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(t.volume6() == 1);
    CHECK(t.faces().size() == 4);
    for (const Face& f : t.faces()) CHECK(f.vertex_indices.size() == 3);
}

TEST_CASE("degenerate input is rejected") {
    // Flat (zero volume).
    CHECK_THROWS_AS(ConvexPolytope3("flat", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), GeometryError);
    // Collinear triple.
    CHECK_THROWS_AS(ConvexPolytope3("line", {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                    GeometryError);
}

TEST_CASE("containment against the parameter bundle") {
    ConvexPolytope3 bundle = load_bundle();
    CHECK(bundle.volume6() == 3500658000);
    CHECK(bundle.min_z() == 105);
    CHECK(bundle.max_z() == 840);
    // Boundary point: inside the closed set, outside the open one.
    CHECK(bundle.contains(IVec3{420, 0, 105}, /*strict=*/false));
    CHECK_FALSE(bundle.contains(IVec3{420, 0, 105}, /*strict=*/true));
    // Below the bottom fiber.
    CHECK_FALSE(bundle.contains(IVec3{0, 0, 104}, /*strict=*/false));
    // Deep interior.
    CHECK(bundle.contains(IVec3{0, 0, 400}, /*strict=*/true));
    // Rational containment agrees with the integer overload.
    CHECK(bundle.contains(RVec3{Rational(1, 2), Rational(1, 3), Rational(400)}, /*strict=*/true));
}

TEST_CASE("containment is monotone in strictness") {
    ConvexPolytope3 c = cube420();
    for (const IVec3& v : {IVec3{1, 1, 1}, IVec3{0, 210, 210}, IVec3{210, 210, 210}, IVec3{500, 0, 0}}) {
        if (c.contains(v, /*strict=*/true)) CHECK(c.contains(v, /*strict=*/false));
    }
}

TEST_CASE("disjointness witnesses") {
    ConvexPolytope3 a("a", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    ConvexPolytope3 b("b", {{2, 0, 0}, {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {3, 1, 0}, {3, 0, 1}, {2, 1, 1}, {3, 1, 1}});
    auto w = disjoint_witness(a, b);
    REQUIRE(w.has_value());
    // Self comparison has no separating direction.
    CHECK_FALSE(disjoint_witness(a, a).has_value());
    // The witness property itself: w separates the vertex sets.
    std::int64_t max_a = dot(*w, a.vertices()[0]), min_a = max_a;
    for (const IVec3& v : a.vertices()) {
        max_a = std::max(max_a, dot(*w, v));
        min_a = std::min(min_a, dot(*w, v));
    }
    std::int64_t max_b = dot(*w, b.vertices()[0]), min_b = max_b;
    for (const IVec3& v : b.vertices()) {
        max_b = std::max(max_b, dot(*w, v));
        min_b = std::min(min_b, dot(*w, v));
    }
    CHECK((max_a <= min_b || max_b <= min_a));
}

TEST_CASE("affine maps compose and invert") {
    AffineMap3 m;
    m.m = {{{1, 0, 2}, {0, 1, -2}, {0, 0, 1}}};
    m.t = {-840, 840, 0};
    AffineMap3 inv = m.inverse();
    IVec3 p{37, -12, 300};
    CHECK(inv.apply(m.apply(p)) == p);
    CHECK(m.compose(inv).apply(p) == p);
    ConvexPolytope3 c = cube420();
    ConvexPolytope3 image = apply_map(c, m, "image");
    CHECK(image.volume6() == c.volume6());
    ConvexPolytope3 back = apply_map(image, inv, "back");
    CHECK(back == c);

    AffineMap3 id;
    CHECK(apply_map(c, id, "same") == c);
}

TEST_CASE("z restriction and fiber slices") {
    ConvexPolytope3 bundle = load_bundle();
    ConvexPolytope3 mid = restrict_z(bundle, 210, 420, "mid");
    CHECK(mid.min_z() == 210);
    CHECK(mid.max_z() == 420);
    // Fiber area is 4s in plane units: at z = 420 s = 1, area = 4 * 420^2.
    ConvexPolygon2 top = slice_at(mid, Rational(420));
    CHECK(top.area() == Rational(4) * Rational(420) * Rational(420));
    ConvexPolygon2 bottom = slice_at(mid, Rational(210));
    CHECK(bottom.area() == Rational(2) * Rational(420) * Rational(420));
    // Slabs partition the volume.
    ConvexPolytope3 low = restrict_z(bundle, 105, 210, "low");
    ConvexPolytope3 high = restrict_z(bundle, 420, 840, "high");
    CHECK(low.volume6() + mid.volume6() + high.volume6() == bundle.volume6());
    // Missing the polytope entirely gives the empty polygon.
    CHECK(slice_at(bundle, Rational(1000)).empty());
}

TEST_CASE("quarter-turn and projective involutions") {
    // iota1 is an involution.
    AffineMap3 rot = iota1_map();
    IVec3 p{37, -12, 300};
    CHECK(rot.apply(rot.apply(p)) == p);

    // iota2 maps the fiber over s to the fiber over 1/(2s) and squares to
    // the identity on rational points.
    RVec3 q = iota2_point(IVec3{420, 0, 210});
    CHECK(q == RVec3{Rational(420), Rational(420), Rational(420)});
    // Involution check on several integer points (exact rationals).
    for (const IVec3& v : {IVec3{420, 0, 210}, IVec3{100, 50, 300}, IVec3{-200, 100, 600}}) {
        RVec3 once = iota2_point(v);
        // apply again via the rational formula
        Rational x = once[0], y = once[1], z = once[2];
        RVec3 twice{Rational(210) * (x + y) / z, Rational(210) * (x - y) / z, Rational(88200) / z};
        CHECK(twice == RVec3{Rational(v.x), Rational(v.y), Rational(v.z)});
    }

    ConvexPolytope3 bundle = load_bundle();
    ConvexPolytope3 top = restrict_z(bundle, 420, 840, "top");
    ConvexPolytope3 mirrored = apply_iota2(top, "mirrored");
    CHECK(mirrored.min_z() == 105);
    CHECK(mirrored.max_z() == 210);
    CHECK(apply_iota2(mirrored, "again") == top);
}

TEST_CASE("improved normal form holds for the bundle") {
    ConvexPolytope3 bundle = load_bundle();
    CHECK(bundle.normals_improved());
    for (const Face& f : bundle.faces()) {
        int small = 0;
        for (std::int64_t c : {f.normal.x, f.normal.y, f.normal.z}) {
            if (c >= -1 && c <= 1) ++small;
            CHECK(c >= -8);
            CHECK(c <= 8);
        }
        CHECK(small >= 2);
    }
}

TEST_CASE("rational vertex import requires integrality") {
    std::vector<RVec3> good = {{Rational(0), Rational(0), Rational(0)},
                               {Rational(1), Rational(0), Rational(0)},
                               {Rational(0), Rational(1), Rational(0)},
                               {Rational(0), Rational(0), Rational(1)}};
    CHECK(polytope_from_rational("t", good).volume6() == 1);
    std::vector<RVec3> bad = good;
    bad[1][0] = Rational(1, 2);
    CHECK_THROWS_AS(polytope_from_rational("t", bad), GeometryError);
}
