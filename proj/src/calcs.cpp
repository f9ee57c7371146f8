#include "octapet/calcs.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "octapet/errors.hpp"
#include "octapet/geometry2.hpp"

namespace octapet {
namespace {

// ---------------------------------------------------------------------------
// Small utilities
// ---------------------------------------------------------------------------

ConvexPolytope3 load_aux_polytope(const std::string& dir, const std::string& key) {
    std::ifstream in(dir + "/aux.json");
    if (!in) throw Error("cannot open fixture file " + dir + "/aux.json");
    nlohmann::json j;
    in >> j;
    std::vector<IVec3> vertices;
    for (const auto& v : j.at("polytopes").at(key)) {
        vertices.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>(), v.at(2).get<std::int64_t>()});
    }
    return ConvexPolytope3(key, std::move(vertices));
}

ConvexPolytope3 scaled_by(const ConvexPolytope3& p, std::int64_t k, const std::string& name) {
    std::vector<IVec3> v;
    for (const IVec3& w : p.vertices()) v.push_back(k * w);
    return ConvexPolytope3(name, std::move(v));
}

AffineMap3 scaled_translation(const AffineMap3& map, std::int64_t k) {
    AffineMap3 out = map;
    out.t = k * out.t;
    return out;
}

/// +1 if every vertex has x >= 0, -1 if every vertex has x <= 0, 0 otherwise.
int half_of(const ConvexPolytope3& p) {
    bool nonneg = true, nonpos = true;
    for (const IVec3& v : p.vertices()) {
        if (v.x > 0) nonpos = false;
        if (v.x < 0) nonneg = false;
    }
    if (nonpos) return -1;
    if (nonneg) return +1;
    return 0;
}

bool contains_all_vertices(const ConvexPolytope3& outer, const ConvexPolytope3& inner) {
    for (const IVec3& v : inner.vertices()) {
        if (!outer.contains(v, /*strict=*/false)) return false;
    }
    return true;
}

/// Projective map at doubled homogeneous coordinates (x, y, z, w); the last
/// row must stay positive on every vertex it is applied to.
struct Projective3 {
    std::array<std::array<std::int64_t, 4>, 4> m;

    RVec3 apply(const IVec3& v) const {
        auto row = [&](int r) {
            return Rational(checked_add(checked_add(checked_mul(m[r][0], v.x), checked_mul(m[r][1], v.y)),
                                        checked_add(checked_mul(m[r][2], v.z), m[r][3])));
        };
        Rational w = row(3);
        if (w.sign() <= 0) throw GeometryError("projective map: nonpositive denominator");
        return {row(0) / w, row(1) / w, row(2) / w};
    }
};

ConvexPolytope3 apply_projective(const ConvexPolytope3& p, const Projective3& map, std::string name) {
    std::vector<RVec3> out;
    for (const IVec3& v : p.vertices()) out.push_back(map.apply(v));
    return polytope_from_rational(std::move(name), out);
}

// ---------------------------------------------------------------------------
// Piece tables and return chains
// ---------------------------------------------------------------------------

/// Pieces usable for pulling polytopes back through the inverse map, with all
/// translation parts scaled by `scale` (1 for standard coordinates).
struct PieceTable {
    std::vector<const Piece*> pieces;
    std::int64_t scale = 1;

    AffineMap3 forward(std::size_t i) const { return scaled_translation(full_map(pieces[i]->vector), scale); }
    AffineMap3 backward(std::size_t i) const { return scaled_translation(inverse_map(pieces[i]->vector), scale); }
};

/// Maps P through the inverse map, provided P sits inside the image of a
/// single piece; returns the preimage and the piece index.
std::optional<std::pair<ConvexPolytope3, std::size_t>> pull_back(const PieceTable& table, const ConvexPolytope3& p,
                                                                 std::string name) {
    RVec3 q = p.interior_point();
    for (std::size_t i = 0; i < table.pieces.size(); ++i) {
        RVec3 w = table.backward(i).apply(q);
        if (!table.pieces[i]->polytope.contains(w, /*strict=*/true)) continue;
        ConvexPolytope3 pre = apply_map(p, table.backward(i), std::move(name));
        if (!contains_all_vertices(table.pieces[i]->polytope, pre)) return std::nullopt;
        return std::make_pair(std::move(pre), i);
    }
    return std::nullopt;
}

/// Forward image under the map, provided P sits inside a single piece.
std::optional<ConvexPolytope3> push_forward(const PieceTable& table, const ConvexPolytope3& p, std::string name) {
    RVec3 q = p.interior_point();
    for (std::size_t i = 0; i < table.pieces.size(); ++i) {
        if (!table.pieces[i]->polytope.contains(q, /*strict=*/true)) continue;
        if (!contains_all_vertices(table.pieces[i]->polytope, p)) return std::nullopt;
        return apply_map(p, table.forward(i), std::move(name));
    }
    return std::nullopt;
}

struct Chain {
    bool ok = false;
    std::string detail;
    // Chain elements P_0, ..., P_k (the terminal copy itself is excluded).
    std::vector<ConvexPolytope3> elements;
};

/// Iterates `start` through the map (inverse by default, forward when
/// requested) until it reaches `terminal` exactly; every intermediate
/// iterate must admit a separation witness against each member of `avoid`.
Chain run_chain(const PieceTable& table, const ConvexPolytope3& start, const ConvexPolytope3& terminal,
                const std::vector<ConvexPolytope3>& avoid, const std::string& tag, bool forward = false,
                std::size_t max_steps = 64) {
    Chain chain;
    chain.elements.push_back(start);
    ConvexPolytope3 cur = start;
    for (std::size_t j = 1; j <= max_steps; ++j) {
        std::optional<ConvexPolytope3> next;
        std::string step_name = tag + "[" + std::to_string(j) + "]";
        if (forward) {
            next = push_forward(table, cur, std::move(step_name));
        } else if (auto pre = pull_back(table, cur, std::move(step_name))) {
            next = std::move(pre->first);
        }
        if (!next) {
            chain.detail = tag + ": iterate " + std::to_string(j) + " not inside a single piece image";
            return chain;
        }
        cur = std::move(*next);
        if (cur == terminal) {
            chain.ok = true;
            chain.detail = tag + ": returned after " + std::to_string(j) + " steps";
            return chain;
        }
        for (const ConvexPolytope3& z : avoid) {
            if (!disjoint_witness(cur, z)) {
                chain.detail = tag + ": iterate " + std::to_string(j) + " meets return region piece " + z.name();
                return chain;
            }
        }
        chain.elements.push_back(cur);
    }
    chain.detail = tag + ": no return within " + std::to_string(max_steps) + " steps";
    return chain;
}

bool pairwise_disjoint(const std::vector<const ConvexPolytope3*>& polys, std::string& detail) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            if (!disjoint_witness(*polys[i], *polys[j])) {
                detail = "overlap: " + polys[i]->name() + " vs " + polys[j]->name();
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Conjugate-map scaffolding shared by calculations 1 and 2
// ---------------------------------------------------------------------------

/// An involution acting as a different reflection on each region; the regions
/// partition a section of the bundle.
struct RegionReflection {
    std::vector<ConvexPolytope3> regions;
    std::vector<AffineMap3> maps;

    /// Region whose closure contains every vertex of p, or -1.
    int region_of(const ConvexPolytope3& p) const {
        for (std::size_t r = 0; r < regions.size(); ++r) {
            if (contains_all_vertices(regions[r], p)) return static_cast<int>(r);
        }
        return -1;
    }

    /// Region strictly containing the point, or -1.
    int region_of(const IVec3& v) const {
        for (std::size_t r = 0; r < regions.size(); ++r) {
            if (regions[r].contains(v, /*strict=*/true)) return static_cast<int>(r);
        }
        return -1;
    }

    std::optional<IVec3> apply(const IVec3& v) const {
        int r = region_of(v);
        if (r < 0) return std::nullopt;
        return maps[static_cast<std::size_t>(r)].apply(v);
    }
};

struct GridCompareResult {
    std::size_t pair_count = 0;
    std::size_t grid_hits = 0;
    std::size_t mismatches = 0;
    bool pairs_match = false;
    bool every_pair_hit = false;
    std::string detail;
};

/// Shared core of calculations 1 and 2: given the domain partitions of two
/// maps along with pointwise evaluators, lists the overlapping domain pairs
/// by separation search, then walks the integer grid to (a) confirm the two
/// maps agree at every point where both are defined, (b) confirm every
/// overlapping pair contains a grid point.
GridCompareResult grid_compare(
    const std::vector<ConvexPolytope3>& g_domains, const std::vector<ConvexPolytope3>& h_domains,
    const std::function<std::optional<std::pair<IVec3, std::pair<int, int>>>(const IVec3&)>& evaluate,
    std::int64_t z_steps) {
    GridCompareResult result;
    std::set<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < g_domains.size(); ++i) {
        for (std::size_t j = 0; j < h_domains.size(); ++j) {
            if (!disjoint_witness(g_domains[i], h_domains[j])) {
                pairs.emplace(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    result.pair_count = pairs.size();

    std::set<std::pair<int, int>> covered;
    for (std::int64_t k = 0; k <= z_steps; ++k) {
        for (std::int64_t i = -42; i <= 42; ++i) {
            for (std::int64_t j = -21; j <= 21; ++j) {
                IVec3 p{20 * i, 20 * j, 105 + 10 * k};
                auto r = evaluate(p);
                if (!r) continue;
                ++result.grid_hits;
                IVec3 g = r->first;
                auto [gi, hj] = r->second;
                if (gi < 0 || hj < 0) continue;
                covered.emplace(gi, hj);
                if (!(g == IVec3{0, 0, 0})) {
                    ++result.mismatches;
                }
            }
        }
    }
    result.pairs_match = covered == pairs;
    result.every_pair_hit = std::includes(covered.begin(), covered.end(), pairs.begin(), pairs.end()) ||
                            result.pairs_match;
    if (!result.pairs_match) {
        std::ostringstream os;
        os << "pair lists differ: separation found " << pairs.size() << ", grid met " << covered.size();
        result.detail = os.str();
    }
    return result;
}

// ---------------------------------------------------------------------------
// 2-D helpers for the slice identities and cleanness checks
// ---------------------------------------------------------------------------

ConvexPolygon2 iota_polygon(const ConvexPolygon2& p) { return p.mapped(Rational(-1), Rational(0), Rational(0), Rational(-1)); }

/// Fiber of the bundle at height z (scaled by `unit`): |y| <= z, |x-y| <= unit.
ConvexPolygon2 fiber_polygon(const Rational& z, std::int64_t unit) {
    Rational u(unit);
    return ConvexPolygon2({{u + z, z}, {-u + z, z}, {-u - z, -z}, {u - z, -z}});
}

/// The trivial central tile in the fiber at height z, unit-scaled, for
/// parameters in (unit/2, unit]: the semiregular octagon with vertices
/// (+-z, +-(unit-z)) and (+-(unit-z), +-z); collapses to the diamond at the
/// top end.
ConvexPolygon2 central_octagon(const Rational& z, std::int64_t unit) {
    Rational u(unit), w = u - z;
    std::vector<Point2> pts = {{z, -w}, {z, w}, {w, z}, {-w, z}, {-z, w}, {-z, -w}, {-w, -z}, {w, -z}};
    std::vector<Point2> dedup;
    for (const Point2& p : pts) {
        if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    }
    if (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return ConvexPolygon2(dedup);
}

/// The central diamond |x| + |y| <= unit (the trivial tile above parameter 1).
ConvexPolygon2 central_diamond(std::int64_t unit) {
    Rational u(unit), o(0);
    return ConvexPolygon2({{u, o}, {o, u}, {-u, o}, {o, -u}});
}

struct Segment2 {
    Point2 a, b;
};

std::vector<Segment2> polygon_edges(const ConvexPolygon2& p) {
    std::vector<Segment2> out;
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back({v[i], v[(i + 1) % v.size()]});
    return out;
}

bool on_segment_line(const Segment2& s, const Point2& p) { return cross(s.b - s.a, p - s.a).is_zero(); }

/// True if the segment [a, b] is covered by the union of those candidate
/// segments collinear with it.
bool segment_covered(const Segment2& target, const std::vector<Segment2>& candidates) {
    Point2 d = target.b - target.a;
    if (d.x.is_zero() && d.y.is_zero()) return true;
    Rational len2 = dot(d, d);
    std::vector<std::pair<Rational, Rational>> intervals;
    for (const Segment2& c : candidates) {
        if (!on_segment_line(target, c.a) || !on_segment_line(target, c.b)) continue;
        Rational t0 = dot(c.a - target.a, d) / len2;
        Rational t1 = dot(c.b - target.a, d) / len2;
        if (t1 < t0) std::swap(t0, t1);
        t0 = std::max(t0, Rational(0));
        t1 = std::min(t1, Rational(1));
        if (t0 < t1) intervals.emplace_back(t0, t1);
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational reach(0);
    for (const auto& [t0, t1] : intervals) {
        if (t0 > reach) return false;
        reach = std::max(reach, t1);
    }
    return reach >= Rational(1);
}

/// Checks that the union of `parts` equals `whole` minus `holes`, all exact.
bool region_identity(const ConvexPolygon2& whole, const std::vector<ConvexPolygon2>& holes,
                     const std::vector<ConvexPolygon2>& parts, std::string& detail) {
    Region2 r(whole);
    for (const ConvexPolygon2& h : holes) {
        if (!h.empty()) r.subtract(h);
    }
    Rational part_area(0);
    Region2 leftover = r;
    for (const ConvexPolygon2& p : parts) {
        part_area += p.area();
        if (!p.empty()) leftover.subtract(p);
    }
    if (!leftover.empty()) {
        detail = "region not covered by the parts (residual area " + leftover.area().str() + ")";
        return false;
    }
    if (part_area != r.area()) {
        detail = "part areas " + part_area.str() + " != region area " + r.area().str();
        return false;
    }
    for (const ConvexPolygon2& p : parts) {
        Region2 extra(p);
        for (const ConvexPolygon2& part : r.parts()) extra.subtract(part);
        if (!extra.empty()) {
            detail = "a part leaves the region (residual area " + extra.area().str() + ")";
            return false;
        }
    }
    return true;
}

/// The three boundary conditions making the return region clean: its top and
/// bottom edges are covered by tracked chain-start boundaries, its vertical
/// edges lie on the period-2 tiles, and everything else lies on the fiber
/// boundary.
bool cleanness_at_fiber(const ConvexPolytope3& z0, const ConvexPolytope3& tau,
                        const std::vector<ConvexPolytope3>& chain_starts, const Rational& z, std::int64_t unit,
                        std::string& detail) {
    ConvexPolygon2 zs = slice_at(z0, z);
    if (zs.empty()) return true;
    std::vector<Segment2> boundary_candidates;
    for (const ConvexPolytope3& p : chain_starts) {
        ConvexPolygon2 s = slice_at(p, z);
        if (s.empty()) continue;
        for (const Segment2& e : polygon_edges(s)) boundary_candidates.push_back(e);
    }
    std::vector<Segment2> tau_candidates;
    ConvexPolygon2 ts = slice_at(tau, z);
    if (!ts.empty()) {
        for (const Segment2& e : polygon_edges(ts)) {
            tau_candidates.push_back(e);
            tau_candidates.push_back({Point2{-e.a.x, -e.a.y}, Point2{-e.b.x, -e.b.y}});
        }
    }
    auto on_fiber_boundary = [&](const Segment2& e) {
        Rational u(unit);
        auto on_line = [&](const Point2& p, int which) {
            switch (which) {
                case 0: return p.y == z;
                case 1: return p.y == -z;
                case 2: return p.x - p.y == u;
                default: return p.x - p.y == -u;
            }
        };
        for (int which = 0; which < 4; ++which) {
            if (on_line(e.a, which) && on_line(e.b, which)) return true;
        }
        return false;
    };

    // The region at this fiber is the slice and its half-turn image.
    for (int half = 0; half < 2; ++half) {
        ConvexPolygon2 poly = half == 0 ? zs : iota_polygon(zs);
        for (const Segment2& e : polygon_edges(poly)) {
            if (on_fiber_boundary(e)) continue;
            if (e.a.x == e.b.x) {
                if (!segment_covered(e, tau_candidates)) {
                    detail = "vertical edge not on a period-2 tile at fiber " + z.str();
                    return false;
                }
                continue;
            }
            if (!segment_covered(e, boundary_candidates)) {
                detail = "edge not covered by chain-start boundaries at fiber " + z.str();
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Shared between the two conjugacy calculations 5 and 7
// ---------------------------------------------------------------------------

struct ConjugacyInput {
    std::string name;
    PieceTable table;              // pieces for pulling back, at working scale
    std::vector<ConvexPolytope3> domain;  // the nontrivial pieces at working scale
    Projective3 omega_left, omega_right;
};

CalcReport run_conjugacy_chains(const ConjugacyInput& in, std::vector<ConvexPolytope3>* chain_starts_out,
                                std::vector<ConvexPolytope3>* images_out) {
    CalcReport report;
    report.name = in.name;

    auto omega_image = [&](const ConvexPolytope3& p, const std::string& name) -> std::optional<ConvexPolytope3> {
        int half = half_of(p);
        if (half == 0) return std::nullopt;
        return apply_projective(p, half < 0 ? in.omega_left : in.omega_right, name);
    };

    std::vector<ConvexPolytope3> images;
    bool halves_ok = true;
    std::string halves_detail;
    for (const ConvexPolytope3& y : in.domain) {
        auto w = omega_image(y, "omega(" + y.name() + ")");
        if (!w) {
            halves_ok = false;
            halves_detail = y.name() + " straddles the two components";
            break;
        }
        images.push_back(std::move(*w));
    }
    report.checks.push_back({"pieces lie in one component each", halves_ok, halves_detail});
    if (!halves_ok) return report;

    bool chains_ok = true;
    std::string chains_detail;
    std::size_t total_steps = 0;
    for (std::size_t i = 0; i < in.domain.size() && chains_ok; ++i) {
        auto fy = push_forward(in.table, in.domain[i], "F(" + in.domain[i].name() + ")");
        if (!fy) {
            chains_ok = false;
            chains_detail = in.domain[i].name() + " not inside a single piece";
            break;
        }
        auto start = omega_image(*fy, "omegaF(" + in.domain[i].name() + ")");
        if (!start) {
            chains_ok = false;
            chains_detail = "F(" + in.domain[i].name() + ") straddles the two components";
            break;
        }
        Chain chain = run_chain(in.table, *start, images[i], images, "chain(" + in.domain[i].name() + ")");
        if (!chain.ok) {
            chains_ok = false;
            chains_detail = chain.detail;
            break;
        }
        total_steps += chain.elements.size();
        if (chain_starts_out) chain_starts_out->push_back(*start);
    }
    if (chains_ok) chains_detail = std::to_string(total_steps) + " chain polytopes across the family";
    report.checks.push_back({"return chains reach the conjugate copies exactly", chains_ok, chains_detail});
    if (images_out) *images_out = std::move(images);
    return report;
}

std::vector<ConvexPolytope3> family_restricted(const std::vector<Piece>& pieces, std::size_t from, std::size_t to,
                                               std::int64_t scale) {
    std::vector<ConvexPolytope3> out;
    for (std::size_t i = from; i <= to; ++i) {
        out.push_back(scale == 1 ? pieces[i].polytope
                                 : scaled_by(pieces[i].polytope, scale, pieces[i].polytope.name() + "x2"));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Calculation 1
// ---------------------------------------------------------------------------

CalcReport calc1(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir) {
    CalcReport report;
    report.name = "calc1";

    std::vector<const Piece*> pieces;
    for (const Piece& p : sys.alpha) pieces.push_back(&p);
    for (const Piece& p : sys.beta) pieces.push_back(&p);

    RegionReflection mu;
    ConvexPolytope3 hexagon = load_aux_polytope(fixtures_dir, "hexagon_bundle");
    ConvexPolytope3 left_corner = load_aux_polytope(fixtures_dir, "triangle_bundle");
    ConvexPolytope3 right_corner = apply_map(left_corner, iota1_map(), "corner_bundle_right");
    mu.regions = {hexagon, left_corner, right_corner};
    AffineMap3 reflect_x;
    reflect_x.m = {{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    AffineMap3 reflect_left = reflect_x;
    reflect_left.t = {-840, 0, 0};
    AffineMap3 reflect_right = reflect_x;
    reflect_right.t = {840, 0, 0};
    mu.maps = {reflect_x, reflect_left, reflect_right};

    bool regions_ok = true;
    std::string regions_detail;
    std::vector<ConvexPolytope3> g_domains, h_domains;
    for (const Piece* p : pieces) {
        int r = mu.region_of(p->polytope);
        if (r < 0) {
            regions_ok = false;
            regions_detail = p->polytope.name() + " straddles the reflection regions";
            break;
        }
        g_domains.push_back(apply_map(p->polytope, mu.maps[static_cast<std::size_t>(r)], "mu(" + p->polytope.name() + ")"));
        h_domains.push_back(apply_map(p->polytope, full_map(p->vector), "F(" + p->polytope.name() + ")"));
    }
    report.checks.push_back({"every piece lies in one reflection region", regions_ok, regions_detail});
    if (!regions_ok) return report;

    std::vector<AffineMap3> fwd, bwd;
    for (const Piece* p : pieces) {
        fwd.push_back(full_map(p->vector));
        bwd.push_back(inverse_map(p->vector));
    }
    auto find_strict = [&](const IVec3& v) -> int {
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (pieces[i]->polytope.contains(v, /*strict=*/true)) return static_cast<int>(i);
        }
        return -1;
    };

    // Evaluates G(p) - H(p) with G = mu o F o mu and H = F^{-1}; also reports
    // the domain-pair indices (i, j) with p interior to mu(P_i) and F(P_j).
    auto evaluate = [&](const IVec3& p) -> std::optional<std::pair<IVec3, std::pair<int, int>>> {
        // H side.
        int hj = -1;
        IVec3 h{0, 0, 0};
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            IVec3 w = bwd[j].apply(p);
            if (pieces[j]->polytope.contains(w, /*strict=*/true)) {
                hj = static_cast<int>(j);
                h = w;
                break;
            }
        }
        // G side.
        auto q = mu.apply(p);
        if (!q || hj < 0) return std::nullopt;
        int gi = find_strict(*q);
        if (gi < 0) return std::nullopt;
        IVec3 fq = fwd[static_cast<std::size_t>(gi)].apply(*q);
        auto g = mu.apply(fq);
        if (!g) return std::nullopt;
        return std::make_pair(*g - h, std::make_pair(gi, hj));
    };

    GridCompareResult grid = grid_compare(g_domains, h_domains, evaluate, 31);
    report.checks.push_back({"48 overlapping domain pairs", grid.pair_count == 48,
                             "separation search found " + std::to_string(grid.pair_count)});
    report.checks.push_back({"maps agree at every common grid point", grid.mismatches == 0,
                             std::to_string(grid.grid_hits) + " grid evaluations, " +
                                 std::to_string(grid.mismatches) + " mismatches"});
    report.checks.push_back({"every overlapping pair contains a grid point", grid.pairs_match, grid.detail});
    return report;
}

// ---------------------------------------------------------------------------
// Calculation 2
// ---------------------------------------------------------------------------

CalcReport calc2(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir) {
    CalcReport report;
    report.name = "calc2";

    std::vector<const Piece*> pieces;
    for (const Piece& p : sys.alpha) pieces.push_back(&p);

    RegionReflection nu;
    ConvexPolytope3 strip = load_aux_polytope(fixtures_dir, "strip_pentagon_bundle");
    ConvexPolytope3 corner = load_aux_polytope(fixtures_dir, "corner_triangle_bundle");
    nu.regions = {sys.alpha[0].polytope, strip, corner, apply_map(strip, iota1_map(), "strip_right"),
                  apply_map(corner, iota1_map(), "corner_right")};
    auto diagonal_reflection = [](std::int64_t shift) {
        AffineMap3 m;
        m.m = {{{0, -1, -shift}, {-1, 0, -shift}, {0, 0, 1}}};
        return m;
    };
    nu.maps = {diagonal_reflection(0), diagonal_reflection(2), diagonal_reflection(4), diagonal_reflection(-2),
               diagonal_reflection(-4)};

    bool regions_ok = true;
    std::string regions_detail;
    std::vector<ConvexPolytope3> g_domains, h_domains;
    std::vector<AffineMap3> fwd, bwd;
    for (const Piece* p : pieces) {
        fwd.push_back(full_map(p->vector));
        bwd.push_back(inverse_map(p->vector));
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        ConvexPolytope3 image = apply_map(pieces[i]->polytope, fwd[i], "F(" + pieces[i]->polytope.name() + ")");
        int r = nu.region_of(image);
        if (r < 0) {
            regions_ok = false;
            regions_detail = image.name() + " straddles the reflection regions";
            break;
        }
        g_domains.push_back(apply_map(image, nu.maps[static_cast<std::size_t>(r)], "nu(" + image.name() + ")"));
        h_domains.push_back(pieces[i]->polytope);
    }
    report.checks.push_back({"every piece image lies in one reflection region", regions_ok, regions_detail});
    if (!regions_ok) return report;

    // G = nu o F^{-1} o nu and H = F.
    auto evaluate = [&](const IVec3& p) -> std::optional<std::pair<IVec3, std::pair<int, int>>> {
        int hj = -1;
        IVec3 h{0, 0, 0};
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (pieces[j]->polytope.contains(p, /*strict=*/true)) {
                hj = static_cast<int>(j);
                h = fwd[j].apply(p);
                break;
            }
        }
        auto q = nu.apply(p);
        if (!q || hj < 0) return std::nullopt;
        int gi = -1;
        IVec3 w{0, 0, 0};
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            IVec3 u = bwd[i].apply(*q);
            if (pieces[i]->polytope.contains(u, /*strict=*/true)) {
                gi = static_cast<int>(i);
                w = u;
                break;
            }
        }
        if (gi < 0) return std::nullopt;
        auto g = nu.apply(w);
        if (!g) return std::nullopt;
        return std::make_pair(*g - h, std::make_pair(gi, hj));
    };

    GridCompareResult grid = grid_compare(g_domains, h_domains, evaluate, 10);
    report.checks.push_back({"27 overlapping domain pairs", grid.pair_count == 27,
                             "separation search found " + std::to_string(grid.pair_count)});
    report.checks.push_back({"maps agree at every common grid point", grid.mismatches == 0,
                             std::to_string(grid.grid_hits) + " grid evaluations, " +
                                 std::to_string(grid.mismatches) + " mismatches"});
    report.checks.push_back({"every overlapping pair contains a grid point", grid.pairs_match, grid.detail});
    return report;
}

// ---------------------------------------------------------------------------
// Calculations 3 and 4 (fiber-shift renormalizations with volume accounting)
// ---------------------------------------------------------------------------

namespace {

struct ShiftRenormInput {
    std::string name;
    PieceTable table;                     // pieces covering the target interval
    std::vector<const Piece*> domain;     // the nontrivial source pieces
    bool forward_chains = false;          // iterate F forward (inverse conjugacy) instead of F^{-1}
    AffineMap3 phi_left, phi_right;
    std::vector<const Piece*> trivial;    // source trivial tiles to track (period 2)
    ConvexPolytope3 target_trivial;       // trivial tile bundle of the target interval
    std::int64_t expected_volume6 = 0;
};

CalcReport run_shift_renorm(const PiecewiseAffineSystem& sys, const ShiftRenormInput& in) {
    CalcReport report;
    report.name = in.name;

    auto phi_image = [&](const ConvexPolytope3& p, const std::string& name) -> std::optional<ConvexPolytope3> {
        int half = half_of(p);
        if (half == 0) return std::nullopt;
        return apply_map(p, half < 0 ? in.phi_left : in.phi_right, name);
    };

    // The return region: shifted copies of the nontrivial pieces.
    std::vector<ConvexPolytope3> targets;
    bool halves_ok = true;
    std::string halves_detail;
    for (const Piece* y : in.domain) {
        auto t = phi_image(y->polytope, "phi(" + y->polytope.name() + ")");
        if (!t) {
            halves_ok = false;
            halves_detail = y->polytope.name() + " straddles the two components";
            break;
        }
        targets.push_back(std::move(*t));
    }
    report.checks.push_back({"pieces lie in one component each", halves_ok, halves_detail});
    if (!halves_ok) return report;

    std::vector<ConvexPolytope3> family;
    bool chains_ok = true;
    std::string chains_detail;
    for (std::size_t i = 0; i < in.domain.size() && chains_ok; ++i) {
        ConvexPolytope3 fy = apply_map(in.domain[i]->polytope, full_map(in.domain[i]->vector),
                                       "F(" + in.domain[i]->polytope.name() + ")");
        auto start = phi_image(fy, "phiF(" + in.domain[i]->polytope.name() + ")");
        if (!start) {
            chains_ok = false;
            chains_detail = fy.name() + " straddles the two components";
            break;
        }
        Chain chain = run_chain(in.table, *start, targets[i], targets, "chain(" + in.domain[i]->polytope.name() + ")",
                                in.forward_chains);
        if (!chain.ok) {
            chains_ok = false;
            chains_detail = chain.detail;
            break;
        }
        for (ConvexPolytope3& e : chain.elements) family.push_back(std::move(e));
    }
    report.checks.push_back({"return chains reach the shifted copies exactly", chains_ok, chains_detail});
    if (!chains_ok) return report;

    // Shifted trivial tiles have period 2 and avoid the return region.
    bool trivial_ok = true;
    std::string trivial_detail;
    for (const Piece* t : in.trivial) {
        auto shifted = phi_image(t->polytope, "phi(" + t->polytope.name() + ")");
        ConvexPolytope3 base = shifted ? *shifted
                                       : apply_map(t->polytope, in.phi_left, "phi(" + t->polytope.name() + ")");
        auto once = push_forward(in.table, base, "Fphi(" + t->polytope.name() + ")");
        if (!once) {
            trivial_ok = false;
            trivial_detail = base.name() + ": map not defined on the whole tile";
            break;
        }
        auto twice = push_forward(in.table, *once, "F2phi(" + t->polytope.name() + ")");
        if (!twice || !(*twice == base) || *once == base) {
            trivial_ok = false;
            trivial_detail = base.name() + ": not of period exactly 2";
            break;
        }
        for (const ConvexPolytope3& z : targets) {
            if (!disjoint_witness(base, z) || !disjoint_witness(*once, z)) {
                trivial_ok = false;
                trivial_detail = base.name() + ": period-2 orbit meets the return region";
                break;
            }
        }
        if (!trivial_ok) break;
        family.push_back(base);
        family.push_back(std::move(*once));
    }
    report.checks.push_back({"shifted trivial tiles have period 2 off the return region", trivial_ok, trivial_detail});
    if (!trivial_ok) return report;

    family.push_back(in.target_trivial);

    std::vector<const ConvexPolytope3*> ptrs;
    for (const ConvexPolytope3& p : family) ptrs.push_back(&p);
    std::string disjoint_detail;
    bool disjoint_ok = pairwise_disjoint(ptrs, disjoint_detail);
    report.checks.push_back({"chain family pairwise disjoint", disjoint_ok,
                             disjoint_ok ? std::to_string(family.size()) + " polytopes" : disjoint_detail});

    std::int64_t total = 0;
    for (const ConvexPolytope3& p : family) total = checked_add(total, p.volume6());
    report.checks.push_back({"chain family fills the bundle section", total == in.expected_volume6,
                             "6*volume " + std::to_string(total) + " expected " +
                                 std::to_string(in.expected_volume6)});
    (void)sys;
    return report;
}

}  // namespace

CalcReport calc3(const PiecewiseAffineSystem& sys, const std::string&) {
    ShiftRenormInput in;
    in.name = "calc3";
    for (const Piece& p : sys.gamma) in.table.pieces.push_back(&p);
    for (std::size_t i = 1; i < sys.alpha.size(); ++i) in.domain.push_back(&sys.alpha[i]);
    for (std::size_t i = 1; i < sys.beta.size(); ++i) in.domain.push_back(&sys.beta[i]);
    in.phi_left.t = {-420, -420, 420};
    in.phi_right.t = {420, 420, 420};
    in.trivial = {&sys.alpha[0], &sys.beta[0]};
    in.target_trivial = restrict_z(sys.gamma[0].polytope, 525, 840, "trivial_tile_525_840");
    in.expected_volume6 = 2167074000;
    return run_shift_renorm(sys, in);
}

CalcReport calc4(const PiecewiseAffineSystem& sys, const std::string&) {
    ShiftRenormInput in;
    in.name = "calc4";
    for (const Piece& p : sys.beta) in.table.pieces.push_back(&p);
    for (std::size_t i = 1; i < sys.alpha.size(); ++i) in.domain.push_back(&sys.alpha[i]);
    in.phi_left.m = {{{1, 0, 2}, {0, 1, 2}, {0, 0, -1}}};
    in.phi_left.t = {-420, -420, 420};
    in.phi_right.m = {{{1, 0, -2}, {0, 1, -2}, {0, 0, -1}}};
    in.phi_right.t = {420, 420, 420};
    // Here the shift conjugates the source map to the inverse of the target
    // map, so returns are traced with forward iteration.
    in.forward_chains = true;
    in.trivial = {};
    in.target_trivial = restrict_z(sys.beta[0].polytope, 210, 315, "trivial_tile_210_315");
    in.expected_volume6 = 277830000;
    return run_shift_renorm(sys, in);
}

// ---------------------------------------------------------------------------
// Calculations 5 and 6
// ---------------------------------------------------------------------------

CalcReport calc5(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir) {
    ConjugacyInput in;
    in.name = "calc5";
    for (const Piece& p : sys.gamma) in.table.pieces.push_back(&p);
    in.domain = family_restricted(sys.gamma, 1, 18, 1);
    // Fiber z in (420, 840] maps to 210(3z - 840)/(z - 210); the planar part
    // contracts by 210/(z - 210) with horizontal shift 840 - 2z on the left.
    in.omega_left.m = {{{210, 0, -420, 176400}, {0, 210, 0, 0}, {0, 0, 630, -176400}, {0, 0, 1, -210}}};
    in.omega_right.m = {{{210, 0, 420, -176400}, {0, 210, 0, 0}, {0, 0, 630, -176400}, {0, 0, 1, -210}}};

    std::vector<ConvexPolytope3> chain_starts;
    CalcReport report = run_conjugacy_chains(in, &chain_starts, nullptr);
    if (!report.ok()) return report;

    // Cleanness of the return region over (420, 525]: its boundary is carried
    // by the chain starts, the period-2 tiles, and the fiber boundary.
    ConvexPolytope3 z0 = load_aux_polytope(fixtures_dir, "return_domain_420_525");
    ConvexPolytope3 tau = load_aux_polytope(fixtures_dir, "period2_tile_420_630");
    bool clean_ok = true;
    std::string clean_detail;
    for (std::int64_t z : {441, 462, 483, 504, 525}) {
        if (!cleanness_at_fiber(z0, tau, chain_starts, Rational(z), 420, clean_detail)) {
            clean_ok = false;
            break;
        }
    }
    report.checks.push_back({"return region boundary is clean on (420, 525]", clean_ok, clean_detail});
    return report;
}

CalcReport calc6(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir) {
    CalcReport report;
    report.name = "calc6";

    PieceTable table;
    for (const Piece& p : sys.gamma) table.pieces.push_back(&p);

    // 1: the period-2 tile over (420, 630].
    ConvexPolytope3 tau = load_aux_polytope(fixtures_dir, "period2_tile_420_630");
    bool tau_ok = false;
    std::string tau_detail;
    if (auto once = push_forward(table, tau, "F(tau)")) {
        if (auto twice = push_forward(table, *once, "F2(tau)")) {
            tau_ok = *twice == tau && !(*once == tau);
            tau_detail = tau_ok ? "returns after exactly 2 steps" : "orbit does not close with period 2";
        } else {
            tau_detail = "second image not inside a single piece";
        }
    } else {
        tau_detail = "map not defined on the whole tile";
    }
    report.checks.push_back({"period-2 tile over (420, 630]", tau_ok, tau_detail});

    // 2: on the return domain the inverse map is p -> p + 2(z - 420)(1, 1).
    ConvexPolytope3 z0 = load_aux_polytope(fixtures_dir, "return_domain_420_525");
    ConvexPolytope3 f_gamma13 =
        apply_map(sys.gamma[13].polytope, full_map(sys.gamma[13].vector), "F(gamma13)");
    bool translation_ok = contains_all_vertices(f_gamma13, z0);
    std::string translation_detail = translation_ok ? "" : "return domain not inside F(gamma13)";
    if (translation_ok) {
        RVec3 p = z0.interior_point();
        RVec3 w = sys.apply_F_inverse(p);
        Rational d = (p[2] - Rational(420)) * Rational(2);
        translation_ok = w[0] == p[0] + d && w[1] == p[1] + d && w[2] == p[2];
        translation_detail = translation_ok ? "sampled inside the return domain"
                                            : "inverse map is not the diagonal translation";
    }
    report.checks.push_back({"inverse map translates the return domain diagonally", translation_ok,
                             translation_detail});

    // 3: at the end fibers, four piece images exactly fill the complement of
    // the return region, the conjugate region, and the trivial tiles.
    std::vector<ConvexPolytope3> omega_images;
    {
        ConjugacyInput in;
        in.name = "calc5";
        for (const Piece& p : sys.gamma) in.table.pieces.push_back(&p);
        in.domain = family_restricted(sys.gamma, 1, 18, 1);
        in.omega_left.m = {{{210, 0, -420, 176400}, {0, 210, 0, 0}, {0, 0, 630, -176400}, {0, 0, 1, -210}}};
        in.omega_right.m = {{{210, 0, 420, -176400}, {0, 210, 0, 0}, {0, 0, 630, -176400}, {0, 0, 1, -210}}};
        CalcReport sub = run_conjugacy_chains(in, nullptr, &omega_images);
        if (!sub.checks.empty() && !sub.checks.front().ok) {
            report.checks.push_back({"complement identity at the end fibers", false, sub.checks.front().detail});
            return report;
        }
    }
    bool identity_ok = true;
    std::string identity_detail;
    for (std::int64_t z : {420, 525}) {
        Rational rz(z);
        std::vector<ConvexPolygon2> holes;
        holes.push_back(central_diamond(420));
        ConvexPolygon2 zs = slice_at(z0, rz);
        holes.push_back(zs);
        holes.push_back(iota_polygon(zs));
        // The period-2 tiles are not removed: they belong to the complement
        // and are covered by the four piece images below.
        for (const ConvexPolytope3& w : omega_images) holes.push_back(slice_at(w, rz));
        std::vector<ConvexPolygon2> parts;
        for (std::size_t j : {std::size_t{2}, std::size_t{8}, std::size_t{11}, std::size_t{17}}) {
            ConvexPolytope3 im = apply_map(sys.gamma[j].polytope, full_map(sys.gamma[j].vector),
                                           "F(" + sys.gamma[j].polytope.name() + ")");
            parts.push_back(slice_at(im, rz));
        }
        if (!region_identity(fiber_polygon(rz, 420), holes, parts, identity_detail)) {
            identity_ok = false;
            identity_detail = "fiber " + std::to_string(z) + ": " + identity_detail;
            break;
        }
    }
    report.checks.push_back({"complement identity at the end fibers", identity_ok, identity_detail});

    // The preimages of those four piece images lie in the union of the
    // return region and the period-2 tiles.  A preimage may straddle the
    // shared edge of the return domain and a tile, so the containment is
    // checked fiberwise at the two end fibers (every polytope here is the
    // hull of its end slices over [420, 525]).
    bool preimage_ok = true;
    std::string preimage_detail;
    for (std::size_t j : {std::size_t{2}, std::size_t{8}, std::size_t{11}, std::size_t{17}}) {
        ConvexPolytope3 cut = restrict_z(sys.gamma[j].polytope, 420, 525, sys.gamma[j].polytope.name() + "|[420,525]");
        for (std::int64_t z : {420, 525}) {
            Rational rz(z);
            Region2 residual(slice_at(cut, rz));
            ConvexPolygon2 zs = slice_at(z0, rz);
            ConvexPolygon2 ts = slice_at(tau, rz);
            residual.subtract(zs);
            residual.subtract(iota_polygon(zs));
            residual.subtract(ts);
            residual.subtract(iota_polygon(ts));
            if (!residual.empty()) {
                preimage_ok = false;
                preimage_detail = cut.name() + " leaves the return region at fiber " + std::to_string(z);
                break;
            }
        }
        if (!preimage_ok) break;
    }
    report.checks.push_back({"complement preimages lie in the return region and period-2 tiles", preimage_ok,
                             preimage_detail});
    return report;
}

// ---------------------------------------------------------------------------
// Calculations 7 and 8 (run at doubled scale so the conjugacy stays integral)
// ---------------------------------------------------------------------------

namespace {

/// Doubled-scale copies of the beta pieces, built once per call.
std::vector<Piece> doubled_beta(const PiecewiseAffineSystem& sys) {
    std::vector<Piece> out;
    for (const Piece& p : sys.beta) {
        out.push_back({scaled_by(p.polytope, 2, p.polytope.name() + "x2"), p.vector});
    }
    return out;
}

ConjugacyInput make_calc7_input(const std::vector<Piece>& beta2) {
    ConjugacyInput in;
    in.name = "calc7";
    for (const Piece& p : beta2) in.table.pieces.push_back(&p);
    in.table.scale = 2;
    for (std::size_t i = 1; i < beta2.size(); ++i) in.domain.push_back(beta2[i].polytope);
    // At doubled scale the fiber z in [420, 840] maps to 420(1680 - z)/(1260 - z);
    // the planar part contracts by 420/(1260 - z) with shift 2z - 1680 on the left.
    in.omega_left.m = {{{420, 0, 840, -705600}, {0, 420, 0, 0}, {0, 0, -420, 705600}, {0, 0, -1, 1260}}};
    in.omega_right.m = {{{420, 0, -840, 705600}, {0, 420, 0, 0}, {0, 0, -420, 705600}, {0, 0, -1, 1260}}};
    return in;
}

}  // namespace

CalcReport calc7(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir) {
    std::vector<Piece> beta2 = doubled_beta(sys);
    ConjugacyInput in = make_calc7_input(beta2);

    std::vector<ConvexPolytope3> chain_starts;
    CalcReport report = run_conjugacy_chains(in, &chain_starts, nullptr);
    if (!report.ok()) return report;

    ConvexPolytope3 z0 = scaled_by(load_aux_polytope(fixtures_dir, "return_domain_315_420"), 2, "return_domainx2");
    ConvexPolytope3 tau = scaled_by(load_aux_polytope(fixtures_dir, "period2_tile_315_420"), 2, "taux2");
    bool clean_ok = true;
    std::string clean_detail;
    for (std::int64_t z : {672, 714, 756, 798, 830}) {
        if (!cleanness_at_fiber(z0, tau, chain_starts, Rational(z), 840, clean_detail)) {
            clean_ok = false;
            break;
        }
    }
    report.checks.push_back({"return region boundary is clean on (630, 840)", clean_ok, clean_detail});
    return report;
}

CalcReport calc8(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir) {
    CalcReport report;
    report.name = "calc8";

    PieceTable table;
    for (const Piece& p : sys.beta) table.pieces.push_back(&p);

    // 1: the period-2 tile over [315, 420].
    ConvexPolytope3 tau = load_aux_polytope(fixtures_dir, "period2_tile_315_420");
    bool tau_ok = false;
    std::string tau_detail;
    if (auto once = push_forward(table, tau, "F(tau)")) {
        if (auto twice = push_forward(table, *once, "F2(tau)")) {
            tau_ok = *twice == tau && !(*once == tau);
            tau_detail = tau_ok ? "returns after exactly 2 steps" : "orbit does not close with period 2";
        } else {
            tau_detail = "second image not inside a single piece";
        }
    } else {
        tau_detail = "map not defined on the whole tile";
    }
    report.checks.push_back({"period-2 tile over [315, 420]", tau_ok, tau_detail});

    // 2: on the reduced return domain the forward map is
    // p -> p + (840 - 2z)(1, 1).
    ConvexPolytope3 zstar = load_aux_polytope(fixtures_dir, "return_domain_star_315_420");
    bool translation_ok = contains_all_vertices(sys.beta[7].polytope, zstar);
    std::string translation_detail = translation_ok ? "" : "reduced return domain not inside beta7";
    if (translation_ok) {
        RVec3 p = zstar.interior_point();
        RVec3 w = sys.apply_F(p);
        Rational d = Rational(840) - Rational(2) * p[2];
        translation_ok = w[0] == p[0] + d && w[1] == p[1] + d && w[2] == p[2];
        translation_detail = translation_ok ? "sampled inside the reduced return domain"
                                            : "forward map is not the diagonal translation";
    }
    report.checks.push_back({"forward map translates the reduced return domain diagonally", translation_ok,
                             translation_detail});

    // 3: at the end fibers, four pieces exactly fill the complement of the
    // return region, the conjugate region, and the trivial tiles (checked at
    // doubled scale, matching the conjugate images).
    std::vector<Piece> beta2 = doubled_beta(sys);
    ConjugacyInput in = make_calc7_input(beta2);
    std::vector<ConvexPolytope3> omega_images;
    {
        CalcReport sub = run_conjugacy_chains(in, nullptr, &omega_images);
        if (!sub.checks.empty() && !sub.checks.front().ok) {
            report.checks.push_back({"complement identity at the end fibers", false, sub.checks.front().detail});
            return report;
        }
    }
    // The period-2 tile sits inside the return domain here, so the
    // complement is taken against the reduced return region (domain minus
    // tile); the tile itself belongs to the complement.
    ConvexPolytope3 zred = scaled_by(zstar, 2, "return_domain_starx2");
    bool identity_ok = true;
    std::string identity_detail;
    for (std::int64_t z : {630, 840}) {
        Rational rz(z);
        std::vector<ConvexPolygon2> holes;
        holes.push_back(central_octagon(rz, 840));
        ConvexPolygon2 zs = slice_at(zred, rz);
        holes.push_back(zs);
        holes.push_back(iota_polygon(zs));
        for (const ConvexPolytope3& w : omega_images) holes.push_back(slice_at(w, rz));
        std::vector<ConvexPolygon2> parts;
        for (std::size_t j : {std::size_t{2}, std::size_t{6}, std::size_t{8}, std::size_t{12}}) {
            parts.push_back(slice_at(beta2[j].polytope, rz));
        }
        if (!region_identity(fiber_polygon(rz, 840), holes, parts, identity_detail)) {
            identity_ok = false;
            identity_detail = "fiber " + std::to_string(z) + ": " + identity_detail;
            break;
        }
    }
    report.checks.push_back({"complement identity at the end fibers", identity_ok, identity_detail});

    // The forward images of those four pieces lie in the full return
    // region (the closed images may cover the period-2 tile, which sits
    // inside the return domain here).
    bool image_ok = true;
    std::string image_detail;
    ConvexPolytope3 z0_std = load_aux_polytope(fixtures_dir, "return_domain_315_420");
    ConvexPolytope3 iota_z0 = apply_map(z0_std, iota1_map(), "iota(return_domain)");
    for (std::size_t j : {std::size_t{2}, std::size_t{6}, std::size_t{8}, std::size_t{12}}) {
        ConvexPolytope3 cut = restrict_z(sys.beta[j].polytope, 315, 420, sys.beta[j].polytope.name() + "|[315,420]");
        ConvexPolytope3 image = apply_map(cut, full_map(sys.beta[j].vector), "F(" + cut.name() + ")");
        if (!contains_all_vertices(z0_std, image) && !contains_all_vertices(iota_z0, image)) {
            image_ok = false;
            image_detail = image.name() + " not inside the return region";
            break;
        }
    }
    report.checks.push_back({"complement images lie in the return region", image_ok, image_detail});
    return report;
}

std::vector<CalcReport> run_all_calcs(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir) {
    return {calc1(sys, fixtures_dir), calc2(sys, fixtures_dir), calc3(sys, fixtures_dir),
            calc4(sys, fixtures_dir), calc5(sys, fixtures_dir), calc6(sys, fixtures_dir),
            calc7(sys, fixtures_dir), calc8(sys, fixtures_dir)};
}

std::string calc_reports_to_json(const std::vector<CalcReport>& reports) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const CalcReport& r : reports) {
        nlohmann::ordered_json jr;
        jr["name"] = r.name;
        jr["ok"] = r.ok();
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const CalcCheck& c : r.checks) {
            checks.push_back({{"label", c.label}, {"ok", c.ok}, {"detail", c.detail}});
        }
        jr["checks"] = std::move(checks);
        out.push_back(std::move(jr));
    }
    return out.dump(2) + "\n";
}

}  // namespace octapet
