#include "octapet/renorm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "octapet/errors.hpp"
#include "octapet/tiling.hpp"

namespace octapet {

namespace {

const Rational kHalf(1, 2);
const Rational kOne(1);
const Rational kTwo(2);

Rational frac(const Rational& x) { return x - x.floor(); }

}  // namespace

Rational renorm_R(const Rational& x) {
    if (x.sign() <= 0 || x > kOne) throw BoundaryError("renorm_R: parameter outside (0, 1]: " + x.str());
    if (x == kHalf) throw BoundaryError("renorm_R: undefined at 1/2");
    if (x > kHalf) return kOne - x;
    return frac((kTwo * x).reciprocal());
}

Rational gauss(const Rational& x) {
    if (x.sign() <= 0 || x >= kOne) throw BoundaryError("gauss: parameter outside (0, 1): " + x.str());
    return frac(x.reciprocal());
}

std::vector<Rational> renorm_chain(const Rational& s, std::size_t max_len) {
    std::vector<Rational> chain{s};
    while (!(chain.back().is_zero() || chain.back() == kHalf)) {
        if (chain.size() >= max_len) throw IterationLimitError("renorm_chain: no terminal within " + std::to_string(max_len) + " steps");
        chain.push_back(renorm_R(chain.back()));
    }
    return chain;
}

std::string ContinuedFraction::str() const {
    std::ostringstream os;
    os << "[" << a0.get_str();
    for (std::size_t i = 0; i < terms.size(); ++i) os << (i == 0 ? "; " : ", ") << terms[i].get_str();
    os << "]";
    return os.str();
}

ContinuedFraction continued_fraction(const Rational& x) {
    ContinuedFraction cf;
    cf.a0 = x.floor_z();
    Rational r = frac(x);
    while (!r.is_zero()) {
        Rational inv = r.reciprocal();
        cf.terms.push_back(inv.floor_z());
        r = frac(inv);
    }
    return cf;
}

bool oddly_even(const ContinuedFraction& cf) {
    // Partial quotients a1, a3, a5, ... are terms[0], terms[2], terms[4], ...
    for (std::size_t i = 0; i < cf.terms.size(); i += 2) {
        if (cf.terms[i] % 2 != 0) return false;
    }
    return true;
}

bool oddly_even(const Rational& x) { return oddly_even(continued_fraction(x)); }

Rational modular_up(const Rational& s) {
    if (s <= kOne || s > Rational(4, 3)) throw BoundaryError("modular_up: parameter outside (1, 4/3]: " + s.str());
    return (s - kTwo) / (kTwo * s - Rational(3));
}

Rational modular_down(const Rational& s) {
    if (s < Rational(3, 4) || s >= kOne) throw BoundaryError("modular_down: parameter outside [3/4, 1): " + s.str());
    return (Rational(3) * s - kTwo) / (kTwo * s - kOne);
}

int omega_branch(const Point2& p) {
    int sign = (p.x + p.y).sign();
    if (sign == 0) throw BoundaryError("omega_branch: point on the separating diagonal x + y = 0");
    return sign;
}

Point2 omega_up(const Rational& s, const Point2& p) {
    Rational scale = Rational(3) - kTwo * s;
    Point2 shift{kTwo - kTwo * s, Rational(0)};
    return omega_branch(p) < 0 ? scale * p + shift : scale * p - shift;
}

Point2 omega_down(const Rational& s, const Point2& p) {
    Rational scale = kTwo * s - kOne;
    Point2 shift{kTwo * s - kTwo, Rational(0)};
    return omega_branch(p) < 0 ? scale * p + shift : scale * p - shift;
}

int PiecewiseIsometry2::branch_index(const Point2& p) const {
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (branches[i].domain.contains(p, /*strict=*/true)) return static_cast<int>(i);
    }
    return -1;
}

Point2 PiecewiseIsometry2::apply(const Point2& p) const {
    int i = branch_index(p);
    if (i < 0) throw BoundaryError(name + ": point interior to no branch: " + p.str());
    return branches[static_cast<std::size_t>(i)].apply(p);
}

namespace {

/// Reflection across the line x + y = c: (x, y) -> (c - y, c - x).
AffineBranch diagonal_reflection(ConvexPolygon2 domain, const Rational& c) {
    AffineBranch b;
    b.domain = std::move(domain);
    b.m00 = 0;
    b.m01 = -1;
    b.m10 = -1;
    b.m11 = 0;
    b.t = Point2{c, c};
    return b;
}

/// Reflection across the vertical line x = c/2 in point form x -> c - x.
AffineBranch vertical_reflection(ConvexPolygon2 domain, const Rational& c) {
    AffineBranch b;
    b.domain = std::move(domain);
    b.m00 = -1;
    b.m11 = 1;
    b.t = Point2{c, Rational(0)};
    return b;
}

ConvexPolygon2 clip_band(const ConvexPolygon2& domain, const Point2& n, const Rational& lo, const Rational& hi) {
    return domain.clip({n, hi}).clip({-n, -lo});
}

}  // namespace

SymmetrySet symmetry_maps(const PetSystem& sys) {
    const Rational& s = sys.s;
    if (s.sign() <= 0 || s > kOne) throw BoundaryError("symmetry_maps: parameter outside (0, 1]: " + s.str());
    SymmetrySet maps;

    // mu: vertical-axis reflections conjugating f to f^{-1}.  The central
    // hexagon |x+y| <= 1 of the domain reflects in x = 0; the two corner
    // triangles beyond x + y = -+1 reflect in x = -+1.
    maps.mu.name = "mu";
    const Point2 diag{kOne, kOne};
    ConvexPolygon2 hexagon = clip_band(sys.F1, diag, -kOne, kOne);
    ConvexPolygon2 left_corner = sys.F1.clip({diag, -kOne});
    ConvexPolygon2 right_corner = sys.F1.clip({-diag, -kOne});
    maps.mu.branches.push_back(vertical_reflection(hexagon, Rational(0)));
    maps.mu.branches.push_back(vertical_reflection(left_corner, Rational(-2)));
    maps.mu.branches.push_back(vertical_reflection(right_corner, Rational(2)));

    // nu: slope -1 reflections conjugating f to f^{-1}.  Central tiles (each
    // across its own diagonal) take priority; then the strip piece P and the
    // corner piece Q to the left of them, and their rotated copies.
    maps.nu.name = "nu";
    const Point2 ex{kOne, Rational(0)};
    std::vector<ConvexPolygon2> centers = central_tiles(sys);
    for (const ConvexPolygon2& tile : centers) {
        Point2 c = tile.centroid();
        maps.nu.branches.push_back(diagonal_reflection(tile, c.x + c.y));
    }

    // Center abscissa of the strip piece P; its axis is x + y = c.  The strip
    // occupies the first slot of width 2s to the left of the central tiles;
    // if the outermost central square exactly fits (x0 integer) the slot of
    // that square is reused.  For s > 1/2 the slot adjacent to the central
    // octagon (m = 0) is the one holding the leftover square tile.
    Rational x0 = (kOne - kTwo * s) / (kTwo * s);
    mpz_class m = x0.is_integer() ? x0.num() - 1 : x0.floor_z();
    if (m < 0) m = 0;
    Rational c = -kTwo * Rational(mpq_class(m + 1)) * s;
    ConvexPolygon2 strip = clip_band(sys.F1, ex, c - s, c + s);
    ConvexPolygon2 corner = sys.F1.clip({ex, c - s});
    maps.nu.branches.push_back(diagonal_reflection(strip, c));
    if (!corner.empty()) maps.nu.branches.push_back(diagonal_reflection(corner, c - kTwo * s));
    ConvexPolygon2 strip_r = clip_band(sys.F1, ex, -c - s, -c + s);
    ConvexPolygon2 corner_r = sys.F1.clip({-ex, c - s});
    maps.nu.branches.push_back(diagonal_reflection(strip_r, -c));
    if (!corner_r.empty()) maps.nu.branches.push_back(diagonal_reflection(corner_r, -c + kTwo * s));

    return maps;
}

Point2 inversion_similarity(const Rational& s, const Point2& p) {
    return Point2{s * (p.x + p.y), s * (p.x - p.y)};
}

namespace {

Point2 inversion_similarity_inverse(const Rational& s, const Point2& q) {
    Rational d = kTwo * s;
    return Point2{(q.x + q.y) / d, (q.x - q.y) / d};
}

int component_sign(const Point2& p, const char* what) {
    int sign = p.x.sign();
    if (sign == 0) throw BoundaryError(std::string(what) + ": point on the component separator x = 0");
    return sign;
}

}  // namespace

Point2 MainConjugacy::apply(const Point2& p) const {
    int sign = component_sign(p, "MainConjugacy::apply");
    if (!reversing) {
        Point2 shift = (t - s) * Point2{kOne, kOne};
        return sign < 0 ? p + shift : p - shift;
    }
    Point2 unit{kOne, kOne};
    Point2 shifted = sign < 0 ? p - unit : p + unit;
    return inversion_similarity(s, shifted);
}

Point2 MainConjugacy::apply_inverse(const Point2& z) const {
    Point2 unit{kOne, kOne};
    if (!reversing) {
        Point2 shift = (t - s) * unit;
        Point2 left = z - shift;
        Point2 right = z + shift;
        bool left_ok = left.x.sign() < 0;
        bool right_ok = right.x.sign() > 0;
        if (left_ok == right_ok) throw BoundaryError("MainConjugacy::apply_inverse: branch ambiguous at " + z.str());
        return left_ok ? left : right;
    }
    Point2 q = inversion_similarity_inverse(s, z);
    Point2 left = q + unit;
    Point2 right = q - unit;
    bool left_ok = left.x.sign() < 0;
    bool right_ok = right.x.sign() > 0;
    if (left_ok == right_ok) throw BoundaryError("MainConjugacy::apply_inverse: branch ambiguous at " + z.str());
    return left_ok ? left : right;
}

std::array<Rational, 4> MainConjugacy::linear() const {
    if (!reversing) return {kOne, Rational(0), Rational(0), kOne};
    return {s, s, s, -s};
}

MainConjugacy main_conjugacy(const Rational& s) {
    if (s <= Rational(1, 4) || s >= kOne || s == kHalf) {
        throw BoundaryError("main_conjugacy: parameter outside (1/4,1/2) u (1/2,1): " + s.str());
    }
    MainConjugacy phi;
    phi.s = s;
    phi.t = renorm_R(s);
    phi.reversing = s < kHalf;
    return phi;
}

bool in_Y_interior(const PetSystem& sys, const Point2& p) {
    return sys.F1.contains(p, /*strict=*/true) && !sys.F2.contains(p, /*strict=*/false);
}

std::pair<Point2, std::size_t> first_return_Y(const PetSystem& sys, const Point2& p, std::size_t max_steps) {
    Point2 q = p;
    for (std::size_t k = 1; k <= max_steps; ++k) {
        q = step_f(sys, q).first;
        if (in_Y_interior(sys, q)) return {q, k};
    }
    throw IterationLimitError("first_return_Y: no return within " + std::to_string(max_steps) + " steps");
}

std::pair<Point2, std::size_t> first_return_Z_inverse(const PetSystem& sys, const MainConjugacy& phi,
                                                      const Point2& p, std::size_t max_steps) {
    PetSystem sys_t = build_system(phi.t);
    auto in_Z = [&](const Point2& z) {
        try {
            return in_Y_interior(sys_t, phi.apply_inverse(z));
        } catch (const BoundaryError&) {
            return false;
        }
    };
    Point2 q = p;
    for (std::size_t k = 1; k <= max_steps; ++k) {
        q = step_f_inverse(sys, q).first;
        if (in_Z(q)) return {q, k};
    }
    throw IterationLimitError("first_return_Z_inverse: no return within " + std::to_string(max_steps) + " steps");
}

std::vector<Rational> gamma_orbit(const Rational& x, int depth) {
    auto less = [](const Rational& a, const Rational& b) { return a < b; };
    std::set<Rational, decltype(less)> seen(less);
    std::vector<Rational> frontier{x};
    seen.insert(x);
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<Rational> next;
        for (const Rational& z : frontier) {
            std::vector<Rational> images{z - kOne, z + kOne, -z};
            if (!z.is_zero()) images.push_back((kTwo * z).reciprocal());
            for (const Rational& w : images) {
                if (seen.insert(w).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<Rational> gamma_orbit_reduced(const Rational& x, int depth) {
    std::vector<Rational> all = gamma_orbit(x, depth);
    std::vector<Rational> reduced;
    std::copy_if(all.begin(), all.end(), std::back_inserter(reduced),
                 [](const Rational& z) { return z.sign() >= 0 && z <= kOne; });
    return reduced;
}

}  // namespace octapet
