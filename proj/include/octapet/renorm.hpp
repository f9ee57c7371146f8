#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octapet/geometry2.hpp"
#include "octapet/pet.hpp"
#include "octapet/rational.hpp"

namespace octapet {

/// Parameter renormalization on (0, 1):
///   R(x) = 1 - x                      for x in (1/2, 1],
///   R(x) = 1/(2x) mod 1               for x in (0, 1/2),
/// undefined at x = 1/2 (throws BoundaryError) and outside (0, 1].
Rational renorm_R(const Rational& x);

/// Gauss map g(x) = 1/x mod 1 on (0, 1); g(0) is undefined.
Rational gauss(const Rational& x);

/// The forward R-chain s, R(s), R^2(s), ... of a rational parameter, up to and
/// including the first terminal value (0 or 1/2) where the recursion stops.
/// Every rational in (0, 1] reaches one of the two terminals.
std::vector<Rational> renorm_chain(const Rational& s, std::size_t max_len = 4096);

/// Canonical continued fraction x = a0 + 1/(a1 + 1/(a2 + ...)) of a rational:
/// all partial quotients positive and, for a non-integer, the last one >= 2.
struct ContinuedFraction {
    mpz_class a0;
    std::vector<mpz_class> terms;

    std::string str() const;
};

ContinuedFraction continued_fraction(const Rational& x);

/// True iff every odd-position partial quotient a1, a3, a5, ... of x in (0,1)
/// is even.  For such parameters the square of the renormalization agrees
/// with the square of the Gauss map along the whole chain.
bool oddly_even(const Rational& x);

/// Moebius change of parameter linking the two ends of the family:
///   modular_up :   (1, 4/3] -> (1, 2],    s |-> (s - 2) / (2s - 3)
///   modular_down : [3/4, 1) -> [1/2, 1),  s |-> (3s - 2) / (2s - 1)
/// The two maps are mutually inverse bijections between their interval pairs.
Rational modular_up(const Rational& s);
Rational modular_down(const Rational& s);

/// Planar conjugacy attached to modular_up: for s in (1, 4/3] and u =
/// modular_up(s), carries the nontrivial region of the parameter-u system to
/// the parameter-s plane, one affine branch per component:
///   x + y < -1:  p |-> (3 - 2s) p + (2 - 2s, 0)
///   x + y > +1:  p |-> (3 - 2s) p - (2 - 2s, 0)
/// Undefined (BoundaryError) for |x + y| <= 1... see omega_branch.
Point2 omega_up(const Rational& s, const Point2& p);

/// Planar conjugacy attached to modular_down: for s in [3/4, 1) and u =
/// modular_down(s), one affine branch per component of the parameter-u
/// nontrivial region (separated by the central tile around the origin):
///   left  (x + y < 0): p |-> (2s - 1) p + (2s - 2, 0)
///   right (x + y > 0): p |-> (2s - 1) p - (2s - 2, 0)
Point2 omega_down(const Rational& s, const Point2& p);

/// Branch selector shared by the two omega maps: -1 for the left component
/// (x + y < 0), +1 for the right; BoundaryError at x + y = 0.
int omega_branch(const Point2& p);

/// One affine branch of a piecewise planar map: p |-> M p + t on `domain`.
struct AffineBranch {
    ConvexPolygon2 domain;
    Rational m00{1}, m01{0}, m10{0}, m11{1};
    Point2 t{Rational(0), Rational(0)};

    Point2 apply(const Point2& p) const {
        return Point2{m00 * p.x + m01 * p.y, m10 * p.x + m11 * p.y} + t;
    }
};

/// Piecewise affine planar involution.  Branches are tried in order; the
/// first branch whose domain strictly contains the point is applied.  Points
/// interior to no branch raise BoundaryError.  Earlier branches take priority
/// where closed domains overlap (overlaps only occur along sets where the
/// piecewise translation itself is trivial or undefined).
struct PiecewiseIsometry2 {
    std::string name;
    std::vector<AffineBranch> branches;

    Point2 apply(const Point2& p) const;
    /// Index of the branch apply() would use, or -1.
    int branch_index(const Point2& p) const;
};

/// Reflection symmetries of the system at parameter s:
///   iota: global rotation by pi, conjugating f to f (equivariance).
///   mu:   piecewise vertical-axis reflection conjugating f to f^{-1};
///         pieces: the central hexagon |x+y| <= 1 of X (reflect in x = 0) and
///         the two corner triangles x+y <= -1 / x+y >= 1 (reflect in
///         x = -1 resp. x = +1 vertical axes... in point form x -> ∓2 - x).
///   nu:   piecewise slope -1 reflection conjugating f to f^{-1};
///         pieces: each central tile (reflect in its own diagonal x + y = c),
///         the strip piece and corner piece left of the central tiles, and
///         their rotated copies on the right.
struct SymmetrySet {
    PiecewiseIsometry2 mu;
    PiecewiseIsometry2 nu;
};

SymmetrySet symmetry_maps(const PetSystem& sys);

/// The orientation-reversing similarity (x, y) |-> (s(x+y), s(x-y)) carrying
/// the domain of the parameter-u system, u = 1/(2s), onto the domain of the
/// parameter-s system.  It conjugates the step at u to the inverse step at s.
Point2 inversion_similarity(const Rational& s, const Point2& p);

/// Parameter-plane conjugacy of the main renormalization theorem.  For
/// t = R(s) it carries the nontrivial region Y of the parameter-t system onto
/// the region Z of the parameter-s system and conjugates the first-return map
/// of the t-step on Y to the first return of the *inverse* s-step on Z.
///
/// Supported parameter ranges: s in (1/4, 1/2) and s in (1/2, 1); in both
/// cases the branch is selected by the component (sign of x for points of Y).
struct MainConjugacy {
    Rational s;
    Rational t;           // R(s)
    bool reversing;       // true on s in (1/4,1/2): phi = inversion ∘ shift

    Point2 apply(const Point2& p) const;          // Y_t -> Z_s
    Point2 apply_inverse(const Point2& z) const;  // Z_s -> Y_t

    /// Linear part (m00, m01, m10, m11); identity in the translation case.
    std::array<Rational, 4> linear() const;
};

MainConjugacy main_conjugacy(const Rational& s);

/// True iff p lies in the open nontrivial region Y of `sys` (interior of the
/// domain, outside the closed rotated domain F2).
bool in_Y_interior(const PetSystem& sys, const Point2& p);

/// First return of the full step to the open region Y: iterates the step at
/// most max_steps times starting from f(p) and returns the first iterate
/// interior to Y together with the number of steps taken.
std::pair<Point2, std::size_t> first_return_Y(const PetSystem& sys, const Point2& p, std::size_t max_steps);

/// Same for the inverse step and the region Z = phi(Y) of a MainConjugacy.
std::pair<Point2, std::size_t> first_return_Z_inverse(const PetSystem& sys, const MainConjugacy& phi,
                                                      const Point2& p, std::size_t max_steps);

/// Orbit of x under the group generated by z -> z - 1, z -> 1/(2z), and
/// z -> -z, explored by breadth-first search over words of length at most
/// `depth`.  Returns the sorted distinct values reachable within that bound
/// (unreduced; use gamma_orbit_reduced for representatives in [0, 1]).
std::vector<Rational> gamma_orbit(const Rational& x, int depth);

/// The members of gamma_orbit(x, depth) that lie in [0, 1].
std::vector<Rational> gamma_orbit_reduced(const Rational& x, int depth);

}  // namespace octapet
