#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "octapet/geometry2.hpp"
#include "octapet/rational.hpp"

namespace octapet {

/// Rank-2 planar lattice given by two generators.
struct Lattice2 {
    Point2 g1;
    Point2 g2;

    Point2 vector(std::int64_t m, std::int64_t n) const {
        return {Rational(m) * g1.x + Rational(n) * g2.x, Rational(m) * g1.y + Rational(n) * g2.y};
    }
};

/// The double lattice piecewise translation system at parameter s > 0:
///   F1 = { |y| <= s, |x - y| <= 1 }   (parallelogram, vertices (±1 ± s, ±s))
///   F2 = rotation of F1 by 90 degrees = { |x| <= s, |x + y| <= 1 }
///   L1 = span{ (2,0), (2s,-2s) },  L2 = span{ (0,2), (2s,2s) }.
/// Each F_j is a fundamental domain for both lattices.  The half-step map f'
/// carries F1 to F2 by the unique L1-translation and F2 back to F1 by the
/// unique L2-translation; f = f' ∘ f' is the piecewise translation of F1
/// under study.  f is undefined on piece boundaries (no tie-breaking).
struct PetSystem {
    Rational s;
    ConvexPolygon2 F1;
    ConvexPolygon2 F2;
    Lattice2 L1;
    Lattice2 L2;
};

PetSystem build_system(const Rational& s);

/// One full step of f, recorded by lattice coordinates:
///   V = a(2,0) + b(2s,-2s) in L1 (applied first, F1 -> F2),
///   W = c(0,2) + d(2s,2s) in L2 (applied second, F2 -> F1).
struct SymbolicStep {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;

    friend bool operator==(const SymbolicStep&, const SymbolicStep&) = default;
};

/// Finds the unique lattice vector V with p + V strictly inside `domain`.
/// Returns the lattice coordinates (m, n) with V = m g1 + n g2.  Throws
/// BoundaryError when no translate is strictly interior (p is on the
/// boundary structure) and VerificationError if interior translates are not
/// unique (which would contradict the fundamental-domain property).
std::pair<std::int64_t, std::int64_t> reduce(const Point2& p, const Lattice2& lattice,
                                             const ConvexPolygon2& domain);

/// Brute-force reference implementation of reduce: scans all coefficient
/// pairs with |m|, |n| <= bound.  Kept as the test oracle for `reduce`.
std::pair<std::int64_t, std::int64_t> reduce_bruteforce(const Point2& p, const Lattice2& lattice,
                                                        const ConvexPolygon2& domain, std::int64_t bound);

/// Half-step map f'.  side is the index j of the domain F_j currently
/// containing p; the step translates by the unique L_j vector into F_{3-j}.
/// Returns the image point and the lattice coordinates used.
std::pair<Point2, std::pair<std::int64_t, std::int64_t>> step_fprime(const PetSystem& sys, const Point2& p,
                                                                     int side);

/// Full step f : F1 -> F1 (two half-steps), with its symbolic record.
std::pair<Point2, SymbolicStep> step_f(const PetSystem& sys, const Point2& p);

/// Inverse step f^{-1} : F1 -> F1 (reduce by L2 into F2, then by L1 into F1).
std::pair<Point2, SymbolicStep> step_f_inverse(const PetSystem& sys, const Point2& p);

enum class OrbitStatus { Periodic, Truncated, HitBoundary };

/// Forward orbit record of f.  points[k] is the k-th iterate (points[0] = start);
/// steps[k] is the symbolic step taken from points[k].  For a Periodic orbit,
/// points.size() == period and the step list sums to zero in both lattices.
struct Orbit {
    OrbitStatus status = OrbitStatus::Truncated;
    std::vector<Point2> points;
    std::vector<SymbolicStep> steps;
    std::size_t period = 0;  // valid when status == Periodic
};

/// Iterates f from p until first return to p, a boundary hit, or max_steps.
Orbit compute_orbit(const PetSystem& sys, const Point2& p, std::size_t max_steps);

/// Step budget 4 (p q)^2 used as the default orbit guard at s = p/q.  (A
/// periodic-orbit bound of (pq)^2 holds in a related normalization; the
/// factor 4 is a safety margin.)
std::size_t orbit_step_budget(const Rational& s);

/// Partial sums of the L1 parts V_k of an orbit's symbolic steps (the orbit's
/// arithmetic graph), including the initial zero and the total sum.
std::vector<Point2> arithmetic_graph(const PetSystem& sys, const Orbit& orbit);

/// Smallest nonzero vector of L1 ∩ L2 by (squared norm, lex) order, found by
/// exact enumeration; nullopt when the intersection is trivial, which happens
/// exactly at irrational s (for rational s = p/q the intersection is a finite
/// index sublattice).  `coeff_bound` limits the enumeration of coefficients.
std::optional<Point2> smallest_common_lattice_vector(const Rational& s, std::int64_t coeff_bound = 64);

/// True iff L1 ∩ L2 contains no nonzero vector with coefficients within the
/// enumeration bound.  For rational s this returns false.
bool lattice_intersection_is_trivial(const Rational& s, std::int64_t coeff_bound = 64);

}  // namespace octapet
