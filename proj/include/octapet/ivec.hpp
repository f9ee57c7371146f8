#pragma once

#include <cstdint>
#include <string>

#include "octapet/errors.hpp"

namespace octapet {

/// Checked 64-bit integer arithmetic.  The 3D lattice-polytope machinery runs
/// on plain machine integers for speed, but every operation that could wrap
/// is guarded and throws OverflowError instead of returning garbage.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
    return r;
}

/// Exact integer division: throws unless d != 0 and d divides n exactly.
inline std::int64_t divide_exact(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error("divide_exact: zero divisor");
    if (n % d != 0) throw Error("divide_exact: " + std::to_string(n) + " not divisible by " + std::to_string(d));
    return n / d;
}

/// Integer 3-vector with overflow-checked operations.
struct IVec3 {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    friend bool operator==(const IVec3& a, const IVec3& b) = default;

    /// Lexicographic order; used for canonical vertex orderings.
    friend bool operator<(const IVec3& a, const IVec3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }

    friend IVec3 operator+(const IVec3& a, const IVec3& b) {
        return {checked_add(a.x, b.x), checked_add(a.y, b.y), checked_add(a.z, b.z)};
    }
    friend IVec3 operator-(const IVec3& a, const IVec3& b) {
        return {checked_sub(a.x, b.x), checked_sub(a.y, b.y), checked_sub(a.z, b.z)};
    }
    friend IVec3 operator-(const IVec3& a) { return {-a.x, -a.y, -a.z}; }
    friend IVec3 operator*(std::int64_t s, const IVec3& v) {
        return {checked_mul(s, v.x), checked_mul(s, v.y), checked_mul(s, v.z)};
    }

    std::string str() const {
        return "(" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")";
    }
};

inline std::int64_t dot(const IVec3& a, const IVec3& b) {
    return checked_add(checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y)), checked_mul(a.z, b.z));
}

/// Cross product with an explicit magnitude guard: inputs must have all
/// coordinates below 2^30 in absolute value, which makes every intermediate
/// product safely below 2^61 and the sums below 2^62.
inline IVec3 cross(const IVec3& a, const IVec3& b) {
    constexpr std::int64_t kBound = std::int64_t{1} << 30;
    for (std::int64_t c : {a.x, a.y, a.z, b.x, b.y, b.z}) {
        if (c >= kBound || c <= -kBound) {
            throw OverflowError("IVec3 cross: input coordinate at or beyond 2^30");
        }
    }
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Componentwise exact division (throws unless d divides every coordinate).
inline IVec3 divide_exact(const IVec3& v, std::int64_t d) {
    return {divide_exact(v.x, d), divide_exact(v.y, d), divide_exact(v.z, d)};
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace octapet
