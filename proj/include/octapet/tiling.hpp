#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "octapet/geometry2.hpp"
#include "octapet/pet.hpp"
#include "octapet/rational.hpp"

namespace octapet {

enum class TileShape { Square, SemiRegularOctagon, RightIsoscelesTriangle, Other };

std::string shape_name(TileShape shape);

/// A maximal convex periodic tile: every interior point has the same period
/// and the same symbolic displacement list.
struct Tile {
    ConvexPolygon2 polygon;
    std::size_t period = 0;
    std::vector<SymbolicStep> displacement_list;
    TileShape shape = TileShape::Other;
};

/// A (possibly partial) tiling of the domain by periodic tiles.
struct Tiling {
    Rational s;
    std::vector<Tile> tiles;
    Rational covered_area;
    Rational uncovered_area;
    bool complete = false;     // covered_area == area(F1) == 4s
    std::size_t seeds_tried = 0;
};

/// The central tiles: for s in (1/2,1) the single semi-regular octagon with
/// vertices (+-s,+-(1-s)), (+-(1-s),+-s); for s <= 1/2 the row of squares of
/// side 2s centered at (2as, 0) that fit inside the domain; for s >= 1 the
/// diamonds |x-k| + |y-k| <= 1 centered at (k,k) for integer |k| <= s-1.
std::vector<ConvexPolygon2> central_tiles(const PetSystem& sys);

/// Grows the maximal convex tile around a periodic point: the intersection of
/// the domain with the two translated continuity constraints contributed by
/// each half-step of the orbit.  Throws VerificationError when the orbit of p
/// is not periodic.
Tile grow_tile(const PetSystem& sys, const Point2& p);

/// Assembles the tiling by deterministic seeding: repeatedly picks candidate
/// points inside the uncovered region (fragment centroids, then dyadic blends
/// of the centroid toward each vertex), grows their tiles and subtracts them.
/// Stops when the region is empty (complete) or max_seeds candidates have
/// been tried.  step_budget 0 means orbit_step_budget(s) per orbit.
Tiling compute_tiling(const PetSystem& sys, std::size_t max_seeds, std::size_t step_budget = 0);

/// Shape classification used by the tiling theorems: squares, right isosceles
/// triangles, semi-regular octagons (8 vertices, edges parallel to 8th roots
/// of unity, 8-fold dihedral symmetry about the centroid), everything else
/// Other.
TileShape classify_tile(const ConvexPolygon2& t);

/// One predicted tile shape of the renormalization recursion: the image of a
/// model tile under the accumulated stage transformations.
struct Prototile {
    ConvexPolygon2 polygon;      // a representative at its true scale
    TileShape kind = TileShape::Other;
    Rational scale2;             // squared scale factor of the stage map
    int reversals = 0;           // number of orientation-reversing stages
};

struct ReconstructedTiling {
    std::vector<Prototile> tiles;
    bool complete = false;       // recursion reached a terminal parameter
};

/// Predicts the multiset of tile shapes of the tiling at s (up to
/// translation) from the parameter recursion alone: each stage contributes
/// the image of the stage's central tile under the product of the preceding
/// similarity factors, and a terminal stage additionally contributes four
/// corner triangles.  depth bounds the recursion.
ReconstructedTiling reconstruct_prototiles(const Rational& s, int depth);

/// Set of translation-canonical vertex lists of the tile shapes present.
std::vector<std::vector<Point2>> shape_classes(const std::vector<ConvexPolygon2>& tiles);

struct CoverageStats {
    Rational lambda_area;         // covered fraction of the left region X^0
    Rational lambda_left_edge;    // covered fraction of the edge on x - y = -1
    Rational lambda_bottom_edge;  // covered fraction of the edge on y = -s
};

/// Coverage statistics of a (possibly partial) tiling over the part of the
/// domain to the left of the central tiles.
CoverageStats coverage_stats(const PetSystem& sys, const Tiling& t);

/// Deterministic JSON serialization (rationals as "p/q" strings).
std::string tiling_to_json(const Tiling& t);

/// Deterministic SVG rendering, tiles colored by shape, 12 significant
/// digits.
std::string tiling_to_svg(const Tiling& t);

}  // namespace octapet
