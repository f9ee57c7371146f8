#include "octapet/pet.hpp"

#include <algorithm>

namespace octapet {

PetSystem build_system(const Rational& s) {
    if (s.sign() <= 0) throw Error("build_system: parameter must be positive");
    const Rational one(1);
    PetSystem sys;
    sys.s = s;
    sys.F1 = ConvexPolygon2({{one + s, s}, {-one + s, s}, {-one - s, -s}, {one - s, -s}});
    sys.F2 = ConvexPolygon2({{-s, one + s}, {-s, -one + s}, {s, -one - s}, {s, one - s}});
    sys.L1 = {{2, 0}, {Rational(2) * s, Rational(-2) * s}};
    sys.L2 = {{0, 2}, {Rational(2) * s, Rational(2) * s}};
    return sys;
}

namespace {

std::int64_t to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw OverflowError("lattice coefficient does not fit in int64");
    return z.get_si();
}

/// Enumerates all integer (m, n) with p + m g1 + n g2 in the closed domain,
/// by mapping the domain into lattice-coordinate space and scanning the
/// bounding box of the resulting polygon.
template <typename Visit>
void for_each_reduction(const Point2& p, const Lattice2& lat, const ConvexPolygon2& domain, Visit visit) {
    const Rational det = cross(lat.g1, lat.g2);
    if (det.is_zero()) throw Error("reduce: degenerate lattice");
    // Coefficients of q - p in the basis (g1, g2), via Cramer's rule.
    const auto coeffs = [&](const Point2& q) -> Point2 {
        const Point2 r = q - p;
        return {cross(r, lat.g2) / det, cross(lat.g1, r) / det};
    };
    mpz_class mlo, mhi, nlo, nhi;
    bool first = true;
    for (const auto& v : domain.vertices()) {
        const Point2 c = coeffs(v);
        const mpz_class cm_lo = c.x.floor_z();
        const mpz_class cn_lo = c.y.floor_z();
        if (first) {
            mlo = cm_lo;
            mhi = cm_lo;
            nlo = cn_lo;
            nhi = cn_lo;
            first = false;
        } else {
            mlo = std::min(mlo, cm_lo);
            mhi = std::max(mhi, cm_lo);
            nlo = std::min(nlo, cn_lo);
            nhi = std::max(nhi, cn_lo);
        }
    }
    for (mpz_class m = mlo; m <= mhi + 1; ++m) {
        for (mpz_class n = nlo; n <= nhi + 1; ++n) {
            visit(to_i64(m), to_i64(n));
        }
    }
}

std::pair<std::int64_t, std::int64_t> pick_unique_interior(
    const Point2& p, const Lattice2& lat, const ConvexPolygon2& domain,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& hits) {
    (void)p;
    (void)lat;
    (void)domain;
    if (hits.empty()) {
        throw BoundaryError("reduce: no lattice translate is strictly interior to the domain");
    }
    if (hits.size() > 1) {
        throw VerificationError("reduce: multiple strictly interior translates (fundamental domain violated)");
    }
    return hits.front();
}

}  // namespace

std::pair<std::int64_t, std::int64_t> reduce(const Point2& p, const Lattice2& lattice,
                                             const ConvexPolygon2& domain) {
    std::vector<std::pair<std::int64_t, std::int64_t>> hits;
    for_each_reduction(p, lattice, domain, [&](std::int64_t m, std::int64_t n) {
        if (domain.contains(p + lattice.vector(m, n), /*strict=*/true)) hits.emplace_back(m, n);
    });
    return pick_unique_interior(p, lattice, domain, hits);
}

std::pair<std::int64_t, std::int64_t> reduce_bruteforce(const Point2& p, const Lattice2& lattice,
                                                        const ConvexPolygon2& domain, std::int64_t bound) {
    std::vector<std::pair<std::int64_t, std::int64_t>> hits;
    for (std::int64_t m = -bound; m <= bound; ++m) {
        for (std::int64_t n = -bound; n <= bound; ++n) {
            if (domain.contains(p + lattice.vector(m, n), /*strict=*/true)) hits.emplace_back(m, n);
        }
    }
    return pick_unique_interior(p, lattice, domain, hits);
}

std::pair<Point2, std::pair<std::int64_t, std::int64_t>> step_fprime(const PetSystem& sys, const Point2& p,
                                                                     int side) {
    if (side != 1 && side != 2) throw Error("step_fprime: side must be 1 or 2");
    const Lattice2& lat = (side == 1) ? sys.L1 : sys.L2;
    const ConvexPolygon2& target = (side == 1) ? sys.F2 : sys.F1;
    const auto mn = reduce(p, lat, target);
    return {p + lat.vector(mn.first, mn.second), mn};
}

std::pair<Point2, SymbolicStep> step_f(const PetSystem& sys, const Point2& p) {
    const auto [q, ab] = step_fprime(sys, p, 1);
    const auto [r, cd] = step_fprime(sys, q, 2);
    return {r, SymbolicStep{ab.first, ab.second, cd.first, cd.second}};
}

std::pair<Point2, SymbolicStep> step_f_inverse(const PetSystem& sys, const Point2& p) {
    // Invert the half-steps in the opposite order: L2 back into F2, then L1
    // back into F1.  The recorded coefficients are those of the forward step
    // at the image point, i.e. the negatives of what we apply here.
    const auto cd = reduce(p, sys.L2, sys.F2);
    const Point2 q = p + sys.L2.vector(cd.first, cd.second);
    const auto ab = reduce(q, sys.L1, sys.F1);
    const Point2 r = q + sys.L1.vector(ab.first, ab.second);
    return {r, SymbolicStep{-ab.first, -ab.second, -cd.first, -cd.second}};
}

Orbit compute_orbit(const PetSystem& sys, const Point2& p, std::size_t max_steps) {
    Orbit orbit;
    orbit.points.push_back(p);
    Point2 cur = p;
    for (std::size_t k = 0; k < max_steps; ++k) {
        std::pair<Point2, SymbolicStep> next;
        try {
            next = step_f(sys, cur);
        } catch (const BoundaryError&) {
            orbit.status = OrbitStatus::HitBoundary;
            return orbit;
        }
        orbit.steps.push_back(next.second);
        cur = next.first;
        if (cur == p) {
            orbit.status = OrbitStatus::Periodic;
            orbit.period = k + 1;
            return orbit;
        }
        orbit.points.push_back(cur);
    }
    orbit.status = OrbitStatus::Truncated;
    return orbit;
}

std::size_t orbit_step_budget(const Rational& s) {
    const mpz_class pq = ::abs(s.num()) * s.den();
    const mpz_class budget = 4 * pq * pq;
    if (!budget.fits_ulong_p()) throw OverflowError("orbit_step_budget: bound too large");
    return static_cast<std::size_t>(budget.get_ui());
}

std::vector<Point2> arithmetic_graph(const PetSystem& sys, const Orbit& orbit) {
    std::vector<Point2> sums;
    sums.push_back({0, 0});
    Point2 acc{0, 0};
    for (const auto& st : orbit.steps) {
        acc = acc + sys.L1.vector(st.a, st.b);
        sums.push_back(acc);
    }
    return sums;
}

std::optional<Point2> smallest_common_lattice_vector(const Rational& s, std::int64_t coeff_bound) {
    const Rational two_s = Rational(2) * s;
    std::optional<Point2> best;
    Rational best_norm(0);
    for (std::int64_t m = -coeff_bound; m <= coeff_bound; ++m) {
        for (std::int64_t n = -coeff_bound; n <= coeff_bound; ++n) {
            if (m == 0 && n == 0) continue;
            const Point2 v{Rational(2 * m) + Rational(n) * two_s, Rational(-n) * two_s};
            // Membership in L2: v = c(0,2) + d(2s,2s) needs d = v.x / 2s and
            // c = (v.y - 2 d s)/2 both integral.
            const Rational d = v.x / two_s;
            if (!d.is_integer()) continue;
            const Rational c = (v.y - d * two_s) / Rational(2);
            if (!c.is_integer()) continue;
            const Rational norm = v.norm2();
            if (!best || norm < best_norm || (norm == best_norm && v < *best)) {
                best = v;
                best_norm = norm;
            }
        }
    }
    return best;
}

bool lattice_intersection_is_trivial(const Rational& s, std::int64_t coeff_bound) {
    return !smallest_common_lattice_vector(s, coeff_bound).has_value();
}

}  // namespace octapet
