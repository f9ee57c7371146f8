#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "octapet/errors.hpp"

namespace octapet {

/// Exact rational scalar backed by GMP.  Always normalized: gcd(num, den) = 1
/// and den > 0.  All planar geometry in this library is done with Rational
/// coordinates so that every comparison and every incidence test is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p/q" or a bare integer "p".  Throws Error on malformed input
    /// or a zero denominator.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Largest integer <= value, as a Rational.
    Rational floor() const;
    /// floor(), as a GMP integer.
    mpz_class floor_z() const;

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational reciprocal() const;

    /// Canonical textual form "p/q" (denominator always present, e.g. "3/1").
    std::string str() const;

    /// Exact conversion check: true iff value == n.
    bool operator==(std::int64_t n) const { return q_ == n; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// Approximate double value; only for rendering (SVG), never for logic.
    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact planar point / vector.
struct Point2 {
    Rational x;
    Rational y;

    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
    friend Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }

    /// Lexicographic order (x, then y); used for canonical vertex orderings.
    friend bool operator<(const Point2& a, const Point2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    /// Squared Euclidean length, exact.
    Rational norm2() const { return x * x + y * y; }

    std::string str() const;
};

/// 2D cross product (a x b), exact.
inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
/// 2D dot product, exact.
inline Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

}  // namespace octapet
