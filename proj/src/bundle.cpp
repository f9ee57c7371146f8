#include "octapet/bundle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "octapet/errors.hpp"

namespace octapet {

std::string MapVector::str() const {
    std::ostringstream os;
    os << "(" << u1 << ", " << v1 << ", " << u2 << ", " << v2 << ")";
    return os.str();
}

MapVector map_vector_from_step(const SymbolicStep& step) { return {-step.a, step.b, step.c, -step.d}; }

SymbolicStep step_from_map_vector(const MapVector& v) { return {-v.u1, v.v1, v.u2, -v.v2}; }

AffineMap3 full_map(const MapVector& v) {
    AffineMap3 map;
    map.m = {{{1, 0, 2 * v.v1 - 2 * v.v2}, {0, 1, -2 * v.v1 - 2 * v.v2}, {0, 0, 1}}};
    map.t = {-840 * v.u1, 840 * v.u2, 0};
    return map;
}

AffineMap3 inverse_map(const MapVector& v) { return full_map(v.negated()); }

AffineMap3 half_map(const MapVector& v) {
    MapVector half{v.u1, v.v1, 0, 0};
    return full_map(half);
}

std::vector<const Piece*> PiecewiseAffineSystem::pieces() const {
    std::vector<const Piece*> out;
    out.reserve(alpha.size() + beta.size() + gamma.size());
    for (const Piece& p : alpha) out.push_back(&p);
    for (const Piece& p : beta) out.push_back(&p);
    for (const Piece& p : gamma) out.push_back(&p);
    return out;
}

int PiecewiseAffineSystem::find_piece(const RVec3& v) const {
    auto all = pieces();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i]->polytope.contains(v, /*strict=*/true)) return static_cast<int>(i);
    }
    return -1;
}

RVec3 PiecewiseAffineSystem::apply_F(const RVec3& v) const {
    int i = find_piece(v);
    if (i < 0) throw BoundaryError("apply_F: point interior to no piece");
    return full_map(pieces()[static_cast<std::size_t>(i)]->vector).apply(v);
}

RVec3 PiecewiseAffineSystem::apply_Fprime(const RVec3& v) const {
    int i = find_piece(v);
    if (i < 0) throw BoundaryError("apply_Fprime: point interior to no piece");
    return half_map(pieces()[static_cast<std::size_t>(i)]->vector).apply(v);
}

RVec3 PiecewiseAffineSystem::apply_F_inverse(const RVec3& v) const {
    auto all = pieces();
    for (const Piece* p : all) {
        RVec3 w = inverse_map(p->vector).apply(v);
        if (p->polytope.contains(w, /*strict=*/true)) return w;
    }
    throw BoundaryError("apply_F_inverse: point interior to no image piece");
}

namespace {

const Rational kScale(420);

/// Integer linear form n . (X, Y, Z) + c0 <= 0.
struct LinearForm {
    std::int64_t cx = 0, cy = 0, cz = 0, c0 = 0;

    friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
        return {a.cx + b.cx, a.cy + b.cy, a.cz + b.cz, a.c0 + b.c0};
    }
    friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
        return {a.cx - b.cx, a.cy - b.cy, a.cz - b.cz, a.c0 - b.c0};
    }
    friend LinearForm operator-(const LinearForm& a) { return {-a.cx, -a.cy, -a.cz, -a.c0}; }
    friend LinearForm operator*(std::int64_t s, const LinearForm& a) {
        return {s * a.cx, s * a.cy, s * a.cz, s * a.c0};
    }

    Rational eval(const RVec3& p) const {
        return Rational(cx) * p[0] + Rational(cy) * p[1] + Rational(cz) * p[2] + Rational(c0);
    }
};

/// The 14 halfspaces of the maximal domain with symbolic step (a,b,c,d) over
/// the fiber interval [lo, hi]: domain membership before, between and after
/// the two lattice translations, plus the fiber bounds.
std::vector<LinearForm> piece_constraints(const SymbolicStep& s, std::int64_t lo, std::int64_t hi) {
    const LinearForm X{1, 0, 0, 0}, Y{0, 1, 0, 0}, Z{0, 0, 1, 0}, C420{0, 0, 0, 420};
    auto abs_le = [](const LinearForm& e, const LinearForm& bound, std::vector<LinearForm>& out) {
        out.push_back(e - bound);
        out.push_back(-e - bound);
    };
    LinearForm X1 = X + LinearForm{0, 0, 2 * s.b, 840 * s.a};
    LinearForm Y1 = Y + LinearForm{0, 0, -2 * s.b, 0};
    LinearForm X2 = X1 + LinearForm{0, 0, 2 * s.d, 0};
    LinearForm Y2 = Y1 + LinearForm{0, 0, 2 * s.d, 840 * s.c};

    std::vector<LinearForm> cons;
    abs_le(Y, Z, cons);
    abs_le(X - Y, C420, cons);
    abs_le(X1, Z, cons);
    abs_le(X1 + Y1, C420, cons);
    abs_le(Y2, Z, cons);
    abs_le(X2 - Y2, C420, cons);
    cons.push_back(Z - LinearForm{0, 0, 0, hi});
    cons.push_back(-Z + LinearForm{0, 0, 0, lo});
    return cons;
}

std::optional<RVec3> solve_triple(const LinearForm& a, const LinearForm& b, const LinearForm& c) {
    Rational m[3][4] = {
        {Rational(a.cx), Rational(a.cy), Rational(a.cz), Rational(-a.c0)},
        {Rational(b.cx), Rational(b.cy), Rational(b.cz), Rational(-b.c0)},
        {Rational(c.cx), Rational(c.cy), Rational(c.cz), Rational(-c.c0)},
    };
    Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det.is_zero()) return std::nullopt;
    auto det3 = [&](int col) {
        Rational t[3][3];
        for (int r = 0; r < 3; ++r) {
            for (int cc = 0; cc < 3; ++cc) t[r][cc] = m[r][cc == col ? 3 : cc];
        }
        return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
               t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
    };
    return RVec3{det3(0) / det, det3(1) / det, det3(2) / det};
}

ConvexPolytope3 polytope_from_constraints(const std::string& name, const std::vector<LinearForm>& cons) {
    std::vector<RVec3> vertices;
    const std::size_t n = cons.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                auto p = solve_triple(cons[i], cons[j], cons[k]);
                if (!p) continue;
                bool feasible = true;
                for (const LinearForm& c : cons) {
                    if (c.eval(*p).sign() > 0) {
                        feasible = false;
                        break;
                    }
                }
                if (!feasible) continue;
                if (std::find(vertices.begin(), vertices.end(), *p) == vertices.end()) vertices.push_back(*p);
            }
        }
    }
    return polytope_from_rational(name, vertices);
}

std::int64_t analytic_bundle_volume6(std::int64_t lo, std::int64_t hi) {
    // Fiber area (scaled) is 1680 z, so 6 * volume = 5040 (hi^2 - lo^2).
    return checked_mul(5040, checked_sub(checked_mul(hi, hi), checked_mul(lo, lo)));
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture file " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

std::vector<IVec3> parse_vertices(const nlohmann::json& list) {
    std::vector<IVec3> out;
    for (const auto& v : list) {
        out.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>(), v.at(2).get<std::int64_t>()});
    }
    return out;
}

struct FixturePiece {
    std::string name;
    MapVector vector;
    std::vector<IVec3> vertices;
};

std::vector<FixturePiece> load_piece_fixtures(const std::string& path) {
    nlohmann::json j = load_json(path);
    std::vector<FixturePiece> out;
    for (const auto& piece : j.at("pieces")) {
        FixturePiece fp;
        fp.name = piece.at("name").get<std::string>();
        const auto& vec = piece.at("vector");
        fp.vector = {vec.at(0).get<std::int64_t>(), vec.at(1).get<std::int64_t>(), vec.at(2).get<std::int64_t>(),
                     vec.at(3).get<std::int64_t>()};
        fp.vertices = parse_vertices(piece.at("vertices"));
        out.push_back(std::move(fp));
    }
    return out;
}

}  // namespace

DerivedPartition derive_partition(std::int64_t lo, std::int64_t hi, std::int64_t step_xy, std::int64_t step_z,
                                  int max_refinements) {
    if (lo < 105 || hi > 840 || lo >= hi) throw Error("derive_partition: fiber interval outside [105, 840]");
    std::string last_failure;
    for (int refinement = 0; refinement <= max_refinements; ++refinement) {
        // Discover the symbolic steps present over the interval.
        std::map<SymbolicStep, RVec3, decltype([](const SymbolicStep& a, const SymbolicStep& b) {
                     return std::tie(a.a, a.b, a.c, a.d) < std::tie(b.a, b.b, b.c, b.d);
                 })>
            clusters;
        for (std::int64_t z = lo + step_z; z < hi; z += step_z) {
            PetSystem sys = build_system(Rational(z) / kScale);
            for (std::int64_t y = -z + 1; y < z; y += step_xy) {
                for (std::int64_t x = y - 419; x < y + 420; x += step_xy) {
                    Point2 p{Rational(x) / kScale, Rational(y) / kScale};
                    try {
                        SymbolicStep step = step_f(sys, p).second;
                        clusters.emplace(step, RVec3{Rational(x), Rational(y), Rational(z)});
                    } catch (const BoundaryError&) {
                    }
                }
            }
        }

        DerivedPartition result;
        result.lo = lo;
        result.hi = hi;
        result.refinements = refinement;
        bool ok = true;
        try {
            for (const auto& [step, sample] : clusters) {
                MapVector mv = map_vector_from_step(step);
                Piece piece;
                piece.vector = mv;
                piece.polytope = polytope_from_constraints("derived" + mv.str(), piece_constraints(step, lo, hi));
                if (!piece.polytope.contains(sample, /*strict=*/true)) {
                    throw VerificationError("derived piece does not contain its sample");
                }
                result.pieces.push_back(std::move(piece));
            }
        } catch (const Error& e) {
            ok = false;
            last_failure = e.what();
        }

        if (ok) {
            std::sort(result.pieces.begin(), result.pieces.end(),
                      [](const Piece& a, const Piece& b) { return a.vector < b.vector; });
            std::int64_t total = 0;
            for (const Piece& p : result.pieces) total = checked_add(total, p.polytope.volume6());
            if (total != analytic_bundle_volume6(lo, hi)) {
                ok = false;
                last_failure = "volume fill failed: " + std::to_string(total);
            }
            for (std::size_t i = 0; ok && i < result.pieces.size(); ++i) {
                for (std::size_t j = i + 1; ok && j < result.pieces.size(); ++j) {
                    if (!disjoint_witness(result.pieces[i].polytope, result.pieces[j].polytope)) {
                        ok = false;
                        last_failure = "derived pieces overlap: " + result.pieces[i].vector.str() + " vs " +
                                       result.pieces[j].vector.str();
                    }
                }
            }
        }
        if (ok) return result;
        step_xy = std::max<std::int64_t>(1, step_xy / 2);
        step_z = std::max<std::int64_t>(1, step_z / 2);
    }
    throw VerificationError("derive_partition: " + last_failure);
}

PiecewiseAffineSystem load_fixtures(const std::string& dir) {
    PiecewiseAffineSystem sys;

    // Alpha pieces: 0..9 from the fixture file, 10..18 the half-turn images
    // of 1..9 with negated tuples.
    std::vector<FixturePiece> alpha_fixtures = load_piece_fixtures(dir + "/alpha.json");
    if (alpha_fixtures.size() != 10) throw Error("alpha fixture must list 10 pieces");
    for (const FixturePiece& fp : alpha_fixtures) {
        sys.alpha.push_back({ConvexPolytope3(fp.name, fp.vertices), fp.vector});
    }
    for (std::size_t i = 1; i < 10; ++i) {
        const Piece& base = sys.alpha[i];
        sys.alpha.push_back({apply_map(base.polytope, iota1_map(), "alpha" + std::to_string(9 + i)),
                             base.vector.negated()});
    }

    // Beta pieces: derived from the dynamics; the published tables provide
    // only trustworthy 4-tuples, which fix the indexing 0..12.
    std::vector<FixturePiece> beta_fixtures = load_piece_fixtures(dir + "/beta_printed.json");
    if (beta_fixtures.size() != 7) throw Error("beta fixture must list 7 pieces");
    std::vector<MapVector> beta_vectors;
    for (const FixturePiece& fp : beta_fixtures) beta_vectors.push_back(fp.vector);
    for (std::size_t i = 1; i < 7; ++i) beta_vectors.push_back(beta_vectors[i].negated());

    DerivedPartition derived = derive_partition(210, 420);
    if (derived.pieces.size() != beta_vectors.size()) {
        throw VerificationError("derived beta partition has " + std::to_string(derived.pieces.size()) +
                                " pieces, expected " + std::to_string(beta_vectors.size()));
    }
    for (std::size_t i = 0; i < beta_vectors.size(); ++i) {
        auto it = std::find_if(derived.pieces.begin(), derived.pieces.end(),
                               [&](const Piece& p) { return p.vector == beta_vectors[i]; });
        if (it == derived.pieces.end()) {
            throw VerificationError("no derived piece with tuple " + beta_vectors[i].str());
        }
        sys.beta.push_back({ConvexPolytope3("beta" + std::to_string(i), it->polytope.vertices()), it->vector});
    }

    // Gamma pieces: projective images of the F-images of the alpha pieces,
    // with tuples (u1,v1,u2,v2) -> (-v2,-u2,-v1,-u1).
    for (std::size_t i = 0; i < sys.alpha.size(); ++i) {
        const Piece& a = sys.alpha[i];
        ConvexPolytope3 fa = apply_map(a.polytope, full_map(a.vector), "F(" + a.polytope.name() + ")");
        MapVector c{-a.vector.v2, -a.vector.u2, -a.vector.v1, -a.vector.u1};
        sys.gamma.push_back({apply_iota2(fa, "gamma" + std::to_string(i)), c});
    }

    nlohmann::json aux = load_json(dir + "/aux.json");
    sys.bundle = ConvexPolytope3("bundle", parse_vertices(aux.at("polytopes").at("bundle")));
    AffineMap3 rot;
    rot.m = {{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}};
    sys.rotated_bundle = apply_map(sys.bundle, rot, "rotated_bundle");
    return sys;
}

std::vector<PieceDiff> published_beta_diff(const std::string& dir, const DerivedPartition& derived) {
    std::vector<FixturePiece> beta_fixtures = load_piece_fixtures(dir + "/beta_printed.json");
    std::vector<PieceDiff> diffs;
    for (const FixturePiece& fp : beta_fixtures) {
        auto it = std::find_if(derived.pieces.begin(), derived.pieces.end(),
                               [&](const Piece& p) { return p.vector == fp.vector; });
        std::vector<IVec3> published = fp.vertices;
        std::sort(published.begin(), published.end());
        std::vector<IVec3> derived_verts;
        if (it != derived.pieces.end()) derived_verts = it->polytope.sorted_vertices();
        if (published != derived_verts) {
            diffs.push_back({fp.name, fp.vector, std::move(published), std::move(derived_verts)});
        }
    }
    return diffs;
}

PartitionReport verify_partition(const PiecewiseAffineSystem& sys) {
    PartitionReport report;
    auto all = sys.pieces();
    auto fail = [&](const std::string& message) { report.failures.push_back(message); };

    // Structure of every piece polytope.
    report.vertex_faces_ok = true;
    report.normals_ok = true;
    for (const Piece* p : all) {
        // Genuine-vertex check: every vertex must lie in at least three
        // faces.  "Exactly three" is impossible here: several pieces have
        // five vertices, and a 3-polytope with an odd vertex count cannot
        // be simple (3V/2 edges would not be an integer).
        for (int count : p->polytope.vertex_face_counts()) {
            if (count < 3) {
                report.vertex_faces_ok = false;
                fail(p->polytope.name() + ": vertex in " + std::to_string(count) + " faces");
            }
        }
        if (!p->polytope.normals_improved()) {
            report.normals_ok = false;
            fail(p->polytope.name() + ": face normal not in improved form");
        }
    }

    // Pairwise disjointness, of the pieces and of their F-images.
    report.disjoint_ok = true;
    report.images_disjoint_ok = true;
    std::vector<ConvexPolytope3> images;
    for (const Piece* p : all) {
        images.push_back(apply_map(p->polytope, full_map(p->vector), "F(" + p->polytope.name() + ")"));
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            auto w = disjoint_witness(all[i]->polytope, all[j]->polytope);
            if (w) {
                report.witnesses.push_back({all[i]->polytope.name(), all[j]->polytope.name(), *w});
            } else {
                report.disjoint_ok = false;
                fail("no separation witness: " + all[i]->polytope.name() + " vs " + all[j]->polytope.name());
            }
            if (!disjoint_witness(images[i], images[j])) {
                report.images_disjoint_ok = false;
                fail("no separation witness for images: " + images[i].name() + " vs " + images[j].name());
            }
        }
    }

    // Containments: pieces and their images in the bundle, half-step images
    // in the rotated bundle.
    report.containment_ok = true;
    auto contains_polytope = [](const ConvexPolytope3& outer, const ConvexPolytope3& inner) {
        for (const IVec3& v : inner.vertices()) {
            if (!outer.contains(v, /*strict=*/false)) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (!contains_polytope(sys.bundle, all[i]->polytope)) {
            report.containment_ok = false;
            fail(all[i]->polytope.name() + " not contained in the bundle");
        }
        if (!contains_polytope(sys.bundle, images[i])) {
            report.containment_ok = false;
            fail(images[i].name() + " not contained in the bundle");
        }
        ConvexPolytope3 half = apply_map(all[i]->polytope, half_map(all[i]->vector), "half");
        if (!contains_polytope(sys.rotated_bundle, half)) {
            report.containment_ok = false;
            fail("F'(" + all[i]->polytope.name() + ") not contained in the rotated bundle");
        }
    }

    // Volume fill.
    report.total_volume6 = 0;
    for (const Piece* p : all) report.total_volume6 = checked_add(report.total_volume6, p->polytope.volume6());
    report.bundle_volume6 = sys.bundle.volume6();
    report.volume_ok = report.total_volume6 == report.bundle_volume6;
    if (!report.volume_ok) fail("volume fill: " + std::to_string(report.total_volume6));

    // Maximality evidence: probing just beyond each non-horizontal face must
    // land in a piece with a different tuple.
    report.maximality_ok = true;
    const Rational eps(1, 16);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (const Face& f : all[i]->polytope.faces()) {
            if (f.normal.x == 0 && f.normal.y == 0) continue;
            RVec3 centroid{Rational(0), Rational(0), Rational(0)};
            for (std::size_t idx : f.vertex_indices) {
                const IVec3& v = all[i]->polytope.vertices()[idx];
                centroid[0] += Rational(v.x);
                centroid[1] += Rational(v.y);
                centroid[2] += Rational(v.z);
            }
            Rational n(static_cast<std::int64_t>(f.vertex_indices.size()));
            RVec3 probe{centroid[0] / n + eps * Rational(f.normal.x), centroid[1] / n + eps * Rational(f.normal.y),
                        centroid[2] / n + eps * Rational(f.normal.z)};
            int j = sys.find_piece(probe);
            if (j < 0) continue;  // probe left the bundle or sits on another boundary
            if (all[static_cast<std::size_t>(j)]->vector == all[i]->vector && static_cast<std::size_t>(j) != i) {
                report.maximality_ok = false;
                fail("pieces " + all[i]->polytope.name() + " and " + all[static_cast<std::size_t>(j)]->polytope.name() +
                     " share a face and a tuple");
            }
        }
    }

    return report;
}

std::string partition_report_to_json(const PartitionReport& report) {
    nlohmann::ordered_json j;
    j["vertex_faces_ok"] = report.vertex_faces_ok;
    j["normals_ok"] = report.normals_ok;
    j["disjoint_ok"] = report.disjoint_ok;
    j["images_disjoint_ok"] = report.images_disjoint_ok;
    j["containment_ok"] = report.containment_ok;
    j["volume_ok"] = report.volume_ok;
    j["maximality_ok"] = report.maximality_ok;
    j["total_volume6"] = report.total_volume6;
    j["bundle_volume6"] = report.bundle_volume6;
    j["ok"] = report.ok();
    j["witness_count"] = report.witnesses.size();
    j["failures"] = report.failures;
    return j.dump(2) + "\n";
}

}  // namespace octapet
