#ifndef NSALG_RATIONAL_HPP
#define NSALG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsalg {

// Exact arithmetic base types. mpq_class keeps values canonical
// (lowest terms, positive denominator) after canonicalize().
using Int = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline Rational rat_from_long(long n, long d = 1) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Parses "n/d" or "n". Throws std::runtime_error on malformed input.
inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::runtime_error("malformed rational: '" + s + "'");
    if (sgn(Rational(r.get_den())) == 0)
        throw std::runtime_error("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

/// Canonical form "n/d", denominator always present and positive.
inline std::string rat_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace nsalg

#endif
