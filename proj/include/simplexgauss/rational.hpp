#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace simplexgauss {

// Exact scalar base types. GMP keeps mpq_class canonical (gcd(num,den)=1,
// den > 0, zero as 0/1), which is exactly the invariant we need.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// floor(a/b) for b != 0 (floored division, sign-correct)
inline Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("floor_div by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer floor_rational(const Rational& q) {
    return floor_div(q.get_num(), q.get_den());
}

// floor(a/b) for rationals, b > 0
inline Integer floor_ratio(const Rational& a, const Rational& b) {
    if (sgn(b) <= 0) throw std::domain_error("floor_ratio needs positive divisor");
    return floor_div(a.get_num() * b.get_den(), a.get_den() * b.get_num());
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer abs(const Integer& z) {
    Integer r;
    mpz_abs(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

inline Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "p/q" with the "/q" part omitted for integers
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parse "p", "-p", "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

std::optional<Integer> parse_integer(const std::string& s);

}  // namespace simplexgauss
