#include "octapet/tiling.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

#include "octapet/errors.hpp"
#include "octapet/renorm.hpp"

namespace octapet {

namespace {

const Rational kHalf(1, 2);
const Rational kOne(1);
const Rational kTwo(2);

ConvexPolygon2 square_at(const Point2& c, const Rational& half_side) {
    return ConvexPolygon2({{c.x - half_side, c.y - half_side},
                           {c.x + half_side, c.y - half_side},
                           {c.x + half_side, c.y + half_side},
                           {c.x - half_side, c.y + half_side}});
}

ConvexPolygon2 diamond_at(const Point2& c, const Rational& radius) {
    return ConvexPolygon2({{c.x - radius, c.y}, {c.x, c.y - radius}, {c.x + radius, c.y}, {c.x, c.y + radius}});
}

ConvexPolygon2 octagon_tile(const Rational& s) {
    Rational u = kOne - s;
    return ConvexPolygon2({{s, u}, {u, s}, {-u, s}, {-s, u}, {-s, -u}, {-u, -s}, {u, -s}, {s, -u}});
}

}  // namespace

std::string shape_name(TileShape shape) {
    switch (shape) {
        case TileShape::Square: return "square";
        case TileShape::SemiRegularOctagon: return "semi-regular-octagon";
        case TileShape::RightIsoscelesTriangle: return "right-isosceles-triangle";
        default: return "other";
    }
}

std::vector<ConvexPolygon2> central_tiles(const PetSystem& sys) {
    const Rational& s = sys.s;
    std::vector<ConvexPolygon2> tiles;
    if (s <= kHalf) {
        // Row of grid squares of side 2s centered at (2as, 0) inside the
        // domain: |2as| + 2s <= 1.
        Rational bound = (kOne - kTwo * s) / (kTwo * s);
        mpz_class a_max = bound.floor_z();
        for (mpz_class a = -a_max; a <= a_max; ++a) {
            Rational cx = kTwo * Rational(mpq_class(a)) * s;
            tiles.push_back(square_at({cx, Rational(0)}, s));
        }
    } else if (s < kOne) {
        tiles.push_back(octagon_tile(s));
    } else {
        // Diamonds |x-k| + |y-k| <= 1 centered on the diagonal, |k| <= s-1.
        mpz_class k_max = (s - kOne).floor_z();
        for (mpz_class k = -k_max; k <= k_max; ++k) {
            Rational c = Rational(mpq_class(k));
            tiles.push_back(diamond_at({c, c}, kOne));
        }
    }
    return tiles;
}

Tile grow_tile(const PetSystem& sys, const Point2& p) {
    Orbit orbit = compute_orbit(sys, p, orbit_step_budget(sys.s));
    if (orbit.status != OrbitStatus::Periodic) throw VerificationError("grow_tile: orbit of " + p.str() + " is not periodic");

    ConvexPolygon2 poly = sys.F1;
    Point2 offset{Rational(0), Rational(0)};
    for (const SymbolicStep& step : orbit.steps) {
        Point2 v = sys.L1.vector(step.a, step.b);
        Point2 w = sys.L2.vector(step.c, step.d);
        poly = poly.intersect(sys.F2.translated(-(offset + v)));
        offset = offset + v + w;
        poly = poly.intersect(sys.F1.translated(-offset));
    }
    if (!poly.contains(p, /*strict=*/true)) throw VerificationError("grow_tile: seed not interior to its own tile");

    Tile tile;
    tile.polygon = poly;
    tile.period = orbit.period;
    tile.displacement_list = orbit.steps;
    tile.shape = classify_tile(poly);
    return tile;
}

namespace {

/// Deterministic seed candidates of one uncovered fragment: the centroid,
/// then dyadic blends of the centroid toward each vertex.
std::vector<Point2> seed_candidates(const ConvexPolygon2& fragment) {
    std::vector<Point2> out;
    Point2 c = fragment.centroid();
    out.push_back(c);
    for (int level = 1; level <= 5; ++level) {
        std::int64_t den = std::int64_t(1) << level;
        for (const Point2& v : fragment.vertices()) {
            for (std::int64_t numerator = 1; numerator < den; numerator += 2) {
                Rational w(numerator, den);
                out.push_back(c + w * (v - c));
            }
        }
    }
    return out;
}

}  // namespace

Tiling compute_tiling(const PetSystem& sys, std::size_t max_seeds, std::size_t step_budget) {
    if (step_budget == 0) step_budget = orbit_step_budget(sys.s);
    Tiling tiling;
    tiling.s = sys.s;
    tiling.covered_area = Rational(0);

    Region2 region(sys.F1);
    bool out_of_budget = false;
    while (!region.empty() && !out_of_budget) {
        bool progress = false;
        // Snapshot the fragments: subtraction invalidates the part list.
        std::vector<ConvexPolygon2> fragments = region.parts();
        for (const ConvexPolygon2& fragment : fragments) {
            for (const Point2& seed : seed_candidates(fragment)) {
                if (tiling.seeds_tried >= max_seeds) {
                    out_of_budget = true;
                    break;
                }
                ++tiling.seeds_tried;
                if (!fragment.contains(seed, /*strict=*/true)) continue;
                try {
                    Orbit orbit = compute_orbit(sys, seed, step_budget);
                    if (orbit.status != OrbitStatus::Periodic) continue;
                    Tile tile = grow_tile(sys, seed);
                    tiling.covered_area += tile.polygon.area();
                    region.subtract(tile.polygon);
                    tiling.tiles.push_back(std::move(tile));
                    progress = true;
                } catch (const BoundaryError&) {
                    continue;
                }
                break;
            }
            if (progress || out_of_budget) break;
        }
        if (!progress && !out_of_budget) break;  // every candidate of every fragment failed
    }
    tiling.uncovered_area = region.area();
    tiling.complete = region.empty();
    return tiling;
}

namespace {

Point2 rot90(const Point2& p) { return {-p.y, p.x}; }

bool is_square(const ConvexPolygon2& t) {
    const auto& v = t.vertices();
    if (v.size() != 4) return false;
    std::vector<Point2> e;
    for (std::size_t i = 0; i < 4; ++i) e.push_back(v[(i + 1) % 4] - v[i]);
    Rational len = e[0].norm2();
    for (std::size_t i = 0; i < 4; ++i) {
        if (e[i].norm2() != len) return false;
        if (!dot(e[i], e[(i + 1) % 4]).is_zero()) return false;
    }
    return true;
}

bool is_right_isosceles(const ConvexPolygon2& t) {
    const auto& v = t.vertices();
    if (v.size() != 3) return false;
    for (std::size_t i = 0; i < 3; ++i) {
        Point2 a = v[(i + 1) % 3] - v[i];
        Point2 b = v[(i + 2) % 3] - v[i];
        if (dot(a, b).is_zero() && a.norm2() == b.norm2()) return true;
    }
    return false;
}

bool is_semiregular_octagon(const ConvexPolygon2& t) {
    const auto& v = t.vertices();
    if (v.size() != 8) return false;
    // Edges parallel to the eight half-turn directions.
    for (std::size_t i = 0; i < 8; ++i) {
        Point2 e = v[(i + 1) % 8] - v[i];
        bool canonical = e.x.is_zero() || e.y.is_zero() || e.x == e.y || e.x == -e.y;
        if (!canonical) return false;
    }
    // Dihedral symmetry about the centroid: the vertex set is preserved by a
    // quarter turn and by the reflection across the vertical axis.
    Point2 c = t.centroid();
    std::set<Point2> verts(v.begin(), v.end());
    for (const Point2& p : v) {
        if (!verts.count(c + rot90(p - c))) return false;
        Point2 d = p - c;
        if (!verts.count(c + Point2{-d.x, d.y})) return false;
    }
    return true;
}

}  // namespace

TileShape classify_tile(const ConvexPolygon2& t) {
    if (is_square(t)) return TileShape::Square;
    if (is_right_isosceles(t)) return TileShape::RightIsoscelesTriangle;
    if (is_semiregular_octagon(t)) return TileShape::SemiRegularOctagon;
    return TileShape::Other;
}

namespace {

/// The four corner triangles of the degenerate parameter-0 tile, at unit
/// scale: each has its right angle at the origin.
std::vector<ConvexPolygon2> corner_triangles() {
    Point2 o{Rational(0), Rational(0)};
    Point2 ne{kOne, kOne}, nw{-kOne, kOne}, se{kOne, -kOne}, sw{-kOne, -kOne};
    return {ConvexPolygon2({o, ne, nw}), ConvexPolygon2({o, se, ne}), ConvexPolygon2({o, sw, se}),
            ConvexPolygon2({o, nw, sw})};
}

struct Transform2 {
    Rational a{1}, b{0}, c{0}, d{1};

    Transform2 times(const Rational& m00, const Rational& m01, const Rational& m10, const Rational& m11) const {
        return {a * m00 + b * m10, a * m01 + b * m11, c * m00 + d * m10, c * m01 + d * m11};
    }

    ConvexPolygon2 apply(const ConvexPolygon2& p) const { return p.mapped(a, b, c, d); }
};

}  // namespace

ReconstructedTiling reconstruct_prototiles(const Rational& s, int depth) {
    if (s.sign() <= 0 || s >= kOne) throw BoundaryError("reconstruct_prototiles: parameter outside (0, 1): " + s.str());
    ReconstructedTiling result;
    Rational cur = s;
    Transform2 T;
    Rational scale2 = kOne;
    int reversals = 0;

    auto emit = [&](const ConvexPolygon2& model) {
        Prototile tile;
        tile.polygon = T.apply(model);
        tile.kind = classify_tile(tile.polygon);
        tile.scale2 = scale2;
        tile.reversals = reversals;
        result.tiles.push_back(std::move(tile));
    };

    // A stage reached through the folding branch (previous parameter in
    // (1/2, 1)) does not contribute its central tile: the folded system's
    // central tile is absorbed by the parent's central octagon and only the
    // deeper stages embed as translates.
    bool via_fold = false;
    for (int stage = 0; stage <= depth; ++stage) {
        bool terminal = cur <= kHalf && cur.num() == 1 && cur.den() % 2 == 0;  // cur = 1/(2n)
        if (terminal) {
            emit(square_at({Rational(0), Rational(0)}, cur));
            for (const ConvexPolygon2& tri : corner_triangles()) {
                emit(tri.mapped(cur, Rational(0), Rational(0), cur));
            }
            result.complete = true;
            return result;
        }
        if (cur > kHalf) {
            emit(octagon_tile(cur));
            cur = kOne - cur;
            via_fold = true;
        } else {
            if (!via_fold) emit(square_at({Rational(0), Rational(0)}, cur));
            T = T.times(cur, cur, cur, -cur);
            scale2 *= kTwo * cur * cur;
            ++reversals;
            cur = renorm_R(cur);
            via_fold = false;
        }
    }
    result.complete = false;
    return result;
}

std::vector<std::vector<Point2>> shape_classes(const std::vector<ConvexPolygon2>& tiles) {
    std::vector<std::vector<Point2>> classes;
    classes.reserve(tiles.size());
    for (const ConvexPolygon2& t : tiles) classes.push_back(t.translation_canonical());
    std::sort(classes.begin(), classes.end(), [](const std::vector<Point2>& a, const std::vector<Point2>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Point2& p, const Point2& q) { return p < q; });
    });
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

namespace {

struct Interval {
    Rational lo, hi;
};

Rational merged_length(std::vector<Interval> intervals) {
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    Rational total(0);
    std::size_t i = 0;
    while (i < intervals.size()) {
        Rational lo = intervals[i].lo, hi = intervals[i].hi;
        std::size_t j = i + 1;
        while (j < intervals.size() && intervals[j].lo <= hi) {
            hi = std::max(hi, intervals[j].hi, [](const Rational& a, const Rational& b) { return a < b; });
            ++j;
        }
        total += hi - lo;
        i = j;
    }
    return total;
}

/// x-intervals of the polygon edges lying on the line n.p == c.
std::vector<Interval> edge_intervals_on_line(const ConvexPolygon2& poly, const Point2& n, const Rational& c) {
    std::vector<Interval> out;
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        if (dot(n, a) == c && dot(n, b) == c) {
            Rational lo = std::min(a.x, b.x, [](const Rational& p, const Rational& q) { return p < q; });
            Rational hi = std::max(a.x, b.x, [](const Rational& p, const Rational& q) { return p < q; });
            if (lo < hi) out.push_back({lo, hi});
        }
    }
    return out;
}

std::vector<Interval> clip_intervals(const std::vector<Interval>& xs, const std::vector<Interval>& windows) {
    std::vector<Interval> out;
    for (const Interval& x : xs) {
        for (const Interval& w : windows) {
            Rational lo = std::max(x.lo, w.lo, [](const Rational& a, const Rational& b) { return a < b; });
            Rational hi = std::min(x.hi, w.hi, [](const Rational& a, const Rational& b) { return a < b; });
            if (lo < hi) out.push_back({lo, hi});
        }
    }
    return out;
}

}  // namespace

CoverageStats coverage_stats(const PetSystem& sys, const Tiling& t) {
    // The left region X^0: the domain minus the central tiles, keeping the
    // connected pieces left of them.
    Region2 region(sys.F1);
    for (const ConvexPolygon2& tile : central_tiles(sys)) region.subtract(tile);
    std::vector<ConvexPolygon2> left_parts;
    Rational x0_area(0);
    for (const ConvexPolygon2& part : region.parts()) {
        if (part.centroid().x.sign() < 0) {
            x0_area += part.area();
            left_parts.push_back(part);
        }
    }

    CoverageStats stats{Rational(0), Rational(0), Rational(0)};
    if (x0_area.is_zero()) return stats;

    Rational covered(0);
    for (const Tile& tile : t.tiles) {
        for (const ConvexPolygon2& part : left_parts) {
            covered += tile.polygon.intersect(part).area();
        }
    }
    stats.lambda_area = covered / x0_area;

    // Special boundary edges of X^0, measured by x-extent: the slanted edge
    // on x - y = -1 and the bottom edge on y = -s.
    struct EdgeSpec {
        Point2 n;
        Rational c;
        Rational CoverageStats::*slot;
    };
    const EdgeSpec specs[] = {
        {{kOne, -kOne}, -kOne, &CoverageStats::lambda_left_edge},
        {{Rational(0), kOne}, -sys.s, &CoverageStats::lambda_bottom_edge},
    };
    for (const EdgeSpec& spec : specs) {
        std::vector<Interval> windows;
        for (const ConvexPolygon2& part : left_parts) {
            auto segs = edge_intervals_on_line(part, spec.n, spec.c);
            windows.insert(windows.end(), segs.begin(), segs.end());
        }
        Rational denom = merged_length(windows);
        if (denom.is_zero()) continue;
        std::vector<Interval> covered_segments;
        for (const Tile& tile : t.tiles) {
            auto segs = edge_intervals_on_line(tile.polygon, spec.n, spec.c);
            auto clipped = clip_intervals(segs, windows);
            covered_segments.insert(covered_segments.end(), clipped.begin(), clipped.end());
        }
        stats.*spec.slot = merged_length(covered_segments) / denom;
    }
    return stats;
}

std::string tiling_to_json(const Tiling& t) {
    nlohmann::ordered_json j;
    j["s"] = t.s.str();
    j["covered_area"] = t.covered_area.str();
    j["uncovered_area"] = t.uncovered_area.str();
    j["complete"] = t.complete;
    j["seeds_tried"] = t.seeds_tried;
    j["tiles"] = nlohmann::ordered_json::array();
    for (const Tile& tile : t.tiles) {
        nlohmann::ordered_json jt;
        jt["period"] = tile.period;
        jt["shape"] = shape_name(tile.shape);
        jt["vertices"] = nlohmann::ordered_json::array();
        for (const Point2& v : tile.polygon.vertices()) {
            jt["vertices"].push_back({v.x.str(), v.y.str()});
        }
        jt["steps"] = nlohmann::ordered_json::array();
        for (const SymbolicStep& s : tile.displacement_list) {
            jt["steps"].push_back({s.a, s.b, s.c, s.d});
        }
        j["tiles"].push_back(std::move(jt));
    }
    return j.dump(2) + "\n";
}

namespace {

std::string svg_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

const char* shape_color(TileShape shape) {
    switch (shape) {
        case TileShape::Square: return "#7fb3d5";
        case TileShape::SemiRegularOctagon: return "#f5b041";
        case TileShape::RightIsoscelesTriangle: return "#82e0aa";
        default: return "#d7dbdd";
    }
}

}  // namespace

std::string tiling_to_svg(const Tiling& t) {
    double s = t.s.to_double();
    double margin = 0.1;
    double x0 = -1.0 - s - margin, y0 = -s - margin;
    double w = 2.0 * (1.0 + s + margin), h = 2.0 * (s + margin);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << svg_num(x0) << " " << svg_num(y0) << " "
       << svg_num(w) << " " << svg_num(h) << "\" width=\"800\">\n";
    os << "<g transform=\"scale(1,-1)\" stroke=\"#2c3e50\" stroke-width=\"" << svg_num(0.004 * (1.0 + s))
       << "\">\n";
    for (const Tile& tile : t.tiles) {
        os << "<polygon fill=\"" << shape_color(tile.shape) << "\" points=\"";
        bool first = true;
        for (const Point2& v : tile.polygon.vertices()) {
            if (!first) os << " ";
            first = false;
            os << svg_num(v.x.to_double()) << "," << svg_num(v.y.to_double());
        }
        os << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace octapet
