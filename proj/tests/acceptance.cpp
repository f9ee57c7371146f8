// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "octapet/calcs.hpp"
#include "octapet/ivec.hpp"
#include "octapet/renorm.hpp"
#include "octapet/tiling.hpp"

using namespace octapet;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++failures;
}

const PiecewiseAffineSystem& system_fixture() {
    static PiecewiseAffineSystem sys = load_fixtures(FIXTURES_DIR);
    return sys;
}

// 1: the 51-piece partition is structurally sound, pairwise disjoint,
// contained in the bundle, and fills its volume exactly.
void criterion1() {
    PartitionReport r = verify_partition(system_fixture());
    std::string detail = "51-piece partition verified, total volume6 = " + std::to_string(r.total_volume6);
    if (!r.ok()) {
        detail = "partition verification failed:";
        for (const std::string& f : r.failures) detail += " [" + f + "]";
    }
    report(1, r.ok() && r.total_volume6 == 3500658000, detail);
}

// 2: the two conjugation identities hold with the expected pair counts.
void criterion2() {
    CalcReport r1 = calc1(system_fixture(), FIXTURES_DIR);
    CalcReport r2 = calc2(system_fixture(), FIXTURES_DIR);
    bool pairs1 = false, pairs2 = false;
    for (const CalcCheck& c : r1.checks) {
        if (c.detail.find("48") != std::string::npos) pairs1 = true;
    }
    for (const CalcCheck& c : r2.checks) {
        if (c.detail.find("27") != std::string::npos) pairs2 = true;
    }
    report(2, r1.ok() && r2.ok() && pairs1 && pairs2,
           "inverse/mu conjugation (48 pairs) and forward/nu conjugation (27 pairs) verified on grids");
}

// 3: the six renormalization calculations all verify.
void criterion3() {
    std::vector<CalcReport> all = run_all_calcs(system_fixture(), FIXTURES_DIR);
    bool ok = true;
    std::string detail = "renormalization calculations 3-8 verified";
    for (std::size_t i = 2; i < all.size(); ++i) {
        if (!all[i].ok()) {
            ok = false;
            detail = all[i].name + " failed:";
            for (const CalcCheck& c : all[i].checks) {
                if (!c.ok) detail += " [" + c.label + ": " + c.detail + "]";
            }
            break;
        }
    }
    report(3, ok, detail);
}

// 4: the partition re-derives from the planar dynamics alone; the published
// middle-slab vertex tables are corrupt and the diff is reported as a note.
void criterion4() {
    bool ok = true;
    std::string detail;
    try {
        DerivedPartition bottom = derive_partition(105, 210);
        const std::vector<Piece>& alpha = system_fixture().alpha;
        std::map<MapVector, std::vector<IVec3>> fixture;
        for (const Piece& p : alpha) fixture[p.vector] = p.polytope.sorted_vertices();
        ok = bottom.pieces.size() == 19 && alpha.size() == 19;
        for (const Piece& p : bottom.pieces) {
            auto it = fixture.find(p.vector);
            if (it == fixture.end() || it->second != p.polytope.sorted_vertices()) ok = false;
        }
        DerivedPartition mid = derive_partition(210, 420);
        if (mid.pieces.size() != 13) ok = false;
        for (const Piece& p : mid.pieces) {
            for (const IVec3& v : p.polytope.vertices()) {
                if (Rational(v.x, 420).den() > 4 || Rational(v.y, 420).den() > 4) ok = false;
            }
        }
        std::vector<PieceDiff> diff = published_beta_diff(FIXTURES_DIR, mid);
        if (diff.empty()) ok = false;  // the discrepancy is expected
        detail = "re-derived 19 + 13 pieces; published middle-slab tables differ from derivation for " +
                 std::to_string(diff.size()) + " pieces (known data discrepancy, tuples used for indexing only)";
    } catch (const Error& e) {
        ok = false;
        detail = std::string("derivation failed: ") + e.what();
    }
    report(4, ok, detail);
}

// 5: the bundle action restricted to a fiber agrees with the planar map.
void criterion5() {
    const PiecewiseAffineSystem& sys = system_fixture();
    int checked = 0, mismatched = 0;
    for (int k = 1; k <= 24; ++k) {
        Rational s(2 * k + 1, 4 * k);
        PetSystem planar = build_system(s);
        for (int i = 1; i < 40; ++i) {
            for (int j = 1; j < 12; ++j) {
                Rational y = -s + Rational(2 * j, 12) * s + Rational(1, 997);
                Rational x = y - 1 + Rational(i, 20) + Rational(1, 1013);
                Point2 p{x, y};
                if (!planar.F1.contains(p, true)) continue;
                RVec3 v{x * 420, y * 420, s * 420};
                if (sys.find_piece(v) < 0) continue;
                Point2 image;
                try {
                    image = step_f(planar, p).first;
                } catch (const BoundaryError&) {
                    continue;
                }
                RVec3 w = sys.apply_F(v);
                if (!(w[0] == image.x * 420 && w[1] == image.y * 420 && w[2] == v[2])) ++mismatched;
                ++checked;
            }
        }
    }
    report(5, checked >= 1000 && mismatched == 0,
           "bundle action matches the planar step on " + std::to_string(checked) + " fiber samples (" +
               std::to_string(mismatched) + " mismatches)");
}

// 6: complete exact tilings at the six reference parameters, with the stated
// structure at s = 1/2 and s = 1.
void criterion6() {
    bool ok = true;
    std::string detail = "complete tilings with exact area 4s at the six reference parameters";
    const Rational params[] = {Rational(1, 2), Rational(2, 5),  Rational(5, 13),
                               Rational(8, 13), Rational(7, 10), Rational(1)};
    for (const Rational& s : params) {
        PetSystem sys = build_system(s);
        Tiling t = compute_tiling(sys, 200000);
        if (!t.complete || !(t.covered_area == Rational(4) * s)) {
            ok = false;
            detail = "tiling incomplete at s = " + s.str();
            break;
        }
        if (s == Rational(1, 2)) {
            int squares = 0, triangles = 0;
            for (const Tile& tile : t.tiles) {
                if (tile.shape == TileShape::Square && tile.polygon.area() == Rational(1)) ++squares;
                if (tile.shape == TileShape::RightIsoscelesTriangle) ++triangles;
            }
            if (t.tiles.size() != 5 || squares != 1 || triangles != 4) {
                ok = false;
                detail = "unexpected structure at s = 1/2";
            }
        }
        if (s == Rational(1)) {
            for (const Tile& tile : t.tiles) {
                if (tile.shape != TileShape::Square && tile.shape != TileShape::RightIsoscelesTriangle) {
                    ok = false;
                    detail = "non-square, non-triangle tile at s = 1";
                }
            }
        }
    }
    report(6, ok, detail);
}

// 7: the realized tile shapes match the parameter-recursion prediction.
void criterion7() {
    bool ok = true;
    std::string detail = "tile translation classes match the recursion prediction at 2/5, 5/13, 8/13";
    for (const Rational& s : {Rational(2, 5), Rational(5, 13), Rational(8, 13)}) {
        PetSystem sys = build_system(s);
        Tiling t = compute_tiling(sys, 200000);
        ReconstructedTiling pred = reconstruct_prototiles(s, 64);
        std::vector<ConvexPolygon2> realized, predicted;
        for (const Tile& tile : t.tiles) realized.push_back(tile.polygon);
        for (const Prototile& p : pred.tiles) predicted.push_back(p.polygon);
        if (!t.complete || !pred.complete || !(shape_classes(realized) == shape_classes(predicted))) {
            ok = false;
            detail = "shape classes disagree at s = " + s.str();
        }
    }
    report(7, ok, detail);
}

// 8: the renormalization conjugacy replays the first-return dynamics.
void criterion8() {
    bool ok = true;
    int total = 0;
    for (const Rational& s : {Rational(5, 13), Rational(8, 13)}) {
        MainConjugacy phi = main_conjugacy(s);
        PetSystem sys_t = build_system(phi.t);
        PetSystem sys_s = build_system(s);
        int checked = 0;
        for (int j = 1; j < 31 && checked < 100; ++j) {
            for (int i = 1; i < 200 && checked < 100; ++i) {
                Rational y = -phi.t + Rational(2 * j, 31) * phi.t;
                Rational x = y - 1 + Rational(i, 1013) * 2;
                Point2 p{x, y};
                if (!in_Y_interior(sys_t, p)) continue;
                Point2 z = phi.apply(p);
                try {
                    Point2 ret_t = first_return_Y(sys_t, p, 8192).first;
                    Point2 ret_s = first_return_Z_inverse(sys_s, phi, z, 8192).first;
                    if (!(phi.apply(ret_t) == ret_s)) ok = false;
                    ++checked;
                } catch (const BoundaryError&) {
                }
            }
        }
        if (checked < 100) ok = false;
        total += checked;
    }
    report(8, ok,
           "conjugacy intertwines the first returns on " + std::to_string(total) +
               " sample points at (s, t) = (5/13, 3/10) and (8/13, 5/13)");
}

// 9: symmetry identities -- rotation equivariance, the two reflection
// conjugacies to the inverse map, and the squared-renormalization identity.
void criterion9() {
    bool ok = true;
    std::string detail = "rotation equivariance, reflection conjugacies, and R^2 = g^2 identity verified";
    for (const Rational& s : {Rational(1, 4), Rational(1, 3), Rational(2, 5), Rational(1, 2), Rational(2, 3),
                              Rational(1)}) {
        PetSystem sys = build_system(s);
        SymmetrySet sym = symmetry_maps(sys);
        int rot = 0, mu = 0, nu = 0;
        for (int j = 1; j < 9; ++j) {
            Rational y = -s + Rational(2 * j, 9) * s + Rational(1, 9973);
            for (int i = 1; i < 14; ++i) {
                Rational x = y - 1 + Rational(2 * i, 14) + Rational(1, 10007);
                Point2 p{x, y};
                if (!sys.F1.contains(p, true)) continue;
                try {
                    Point2 fp = step_f(sys, p).first;
                    Point2 fm = step_f(sys, Point2{-p.x, -p.y}).first;
                    if (!(fm == Point2{-fp.x, -fp.y})) ok = false;
                    ++rot;
                } catch (const BoundaryError&) {
                }
                try {
                    Point2 fp = step_f(sys, p).first;
                    if (!(sym.mu.apply(fp) == step_f_inverse(sys, sym.mu.apply(p)).first)) ok = false;
                    ++mu;
                } catch (const BoundaryError&) {
                }
                try {
                    Point2 fp = step_f(sys, p).first;
                    if (!(sym.nu.apply(fp) == step_f_inverse(sys, sym.nu.apply(p)).first)) ok = false;
                    ++nu;
                } catch (const BoundaryError&) {
                }
            }
        }
        if (rot < 25 || mu < 25 || nu < 25) {
            ok = false;
            detail = "too few symmetry samples at s = " + s.str();
        }
    }
    for (int q = 2; q <= 50 && ok; ++q) {
        for (int p = 1; p < q; ++p) {
            if (gcd64(p, q) != 1) continue;
            Rational x(p, q);
            if (x >= Rational(1, 2)) continue;
            ContinuedFraction cf = continued_fraction(x);
            if (cf.terms.empty() || cf.terms[0] % 2 != 0) continue;
            Rational g1 = gauss(x);
            Rational r1 = renorm_R(x);
            if (g1 == Rational(0) || r1 == Rational(0) || r1 == Rational(1, 2)) continue;
            if (!(renorm_R(r1) == gauss(g1))) {
                ok = false;
                detail = "R^2 != g^2 at " + x.str();
            }
        }
    }
    report(9, ok, detail);
}

// 10: partial tilings at the silver-ratio convergents refine monotonically.
void criterion10() {
    bool ok = true;
    std::string detail = "uncovered area strictly decreases over three refinement levels at 2/3, 5/7, 12/17";
    for (const Rational& s : {Rational(2, 3), Rational(5, 7), Rational(12, 17)}) {
        PetSystem sys = build_system(s);
        Tiling coarse = compute_tiling(sys, 5);
        Tiling mid = compute_tiling(sys, 15);
        Tiling fine = compute_tiling(sys, 45);
        if (!(coarse.uncovered_area > mid.uncovered_area && mid.uncovered_area > fine.uncovered_area)) {
            ok = false;
            detail = "refinement not monotone at s = " + s.str();
        }
    }
    report(10, ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures == 0) {
        std::printf("all acceptance criteria satisfied\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", failures);
    return 1;
}
