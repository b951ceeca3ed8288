#pragma once

#include <vector>

#include "simplexgauss/rational.hpp"

namespace simplexgauss {

// Dense univariate polynomial over Q, coefficients ascending by degree.
// The zero polynomial is the empty vector; otherwise the leading
// coefficient is nonzero.
using Poly = std::vector<Rational>;

int degree(const Poly& p);  // -1 for the zero polynomial
void normalize(Poly& p);    // strip leading zeros

Poly poly_from_integers(const std::vector<Integer>& coeffs);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
Poly derivative(const Poly& p);

// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd over Q (constant 1 for coprime inputs, empty only if both zero).
Poly poly_gcd(Poly a, Poly b);

// Extended euclid: returns (g, u, v) with u*a + v*b = g, g monic.
struct ExtGcd {
    Poly g, u, v;
};
ExtGcd poly_ext_gcd(const Poly& a, const Poly& b);

Rational eval(const Poly& p, const Rational& x);

// Interval Horner: encloses {p(x) : x in [lo, hi]}.
struct RatInterval {
    Rational lo, hi;
};
RatInterval eval_interval(const Poly& p, const Rational& lo, const Rational& hi);

// Number of distinct real roots of squarefree p in the open interval
// (lo, hi); requires p(lo) != 0 and p(hi) != 0.
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

// True if gcd(p, p') is constant.
bool is_squarefree(const Poly& p);

// True if p is certified irreducible over Q by factoring mod one of a few
// fixed primes. False means "no certificate", not "reducible".
bool irreducible_mod_prime_certificate(const std::vector<Integer>& coeffs);

// Rational roots of an integer-coefficient polynomial (rational root theorem).
std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs);

}  // namespace simplexgauss
