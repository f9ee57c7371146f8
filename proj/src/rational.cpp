#include "octapet/rational.hpp"

#include <ostream>

namespace octapet {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("Rational: zero denominator");
    q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);  // throws std::invalid_argument on junk
            return Rational(mpq_class(n));
        }
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        if (d == 0) throw Error("Rational::parse: zero denominator in '" + text + "'");
        mpq_class q(n);
        q /= mpq_class(d);
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw Error("Rational::parse: malformed rational '" + text + "'");
    }
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational Rational::floor() const { return Rational(mpq_class(floor_z())); }

mpz_class Rational::floor_z() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return q;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error("Rational: reciprocal of zero");
    return Rational(mpq_class(1 / q_));
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Point2::str() const { return "(" + x.str() + ", " + y.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace octapet
