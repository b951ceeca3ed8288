#pragma once

#include <vector>

#include "simplexgauss/monkemeyer.hpp"
#include "simplexgauss/numberfield.hpp"
#include "simplexgauss/projective.hpp"

namespace simplexgauss {

// Regular continued fraction of a number in [0, 1]: the terms are the
// Gauss-map branch indices (a0 = 0 implicit).
struct CFExpansion {
    std::vector<long> terms;
    bool truncated = false;
};

struct ConvergentPair {
    Integer p, q;
};

// Farey map on [0, 1]; the shared endpoint 1/2 takes branch A so that the
// first-return factorization G = B A^k holds there literally.
template <class S>
std::pair<S, Branch> farey_step(const S& x);

// Gauss map with the convention A_n = (1/(n+1), 1/n]. Returns (0, 0) at 0.
template <class S>
std::pair<S, long> gauss_step(const S& x);

template <class S>
CFExpansion cf_expand(const S& x, long max_terms);

// Convergents p_n/q_n of an expansion (p_0/q_0 = 0/1, p_{-1}/q_{-1} = 1/0).
std::vector<ConvergentPair> convergents(const CFExpansion& cf, long n);

// [[p_{n-1}, p_n], [q_{n-1}, q_n]] = A_{a_1}^{-1} ... A_{a_n}^{-1},
// computed as the matrix product; det = (-1)^n.
IMat convergent_matrix(const CFExpansion& cf, long n);

// I_n * V: columns are the n-th convergent and the mediant of the n-th and
// (n-1)-th convergents.
IMat approx_interval(const CFExpansion& cf, long n);

// Eventual periodicity of the Gauss orbit of a quadratic irrational,
// detected by canonical-state revisit. Returns (preperiod, period) of the
// term sequence.
struct QuadPeriodicity {
    std::vector<long> preperiod;
    std::vector<long> period;
};
QuadPeriodicity quad_periodicity(const NFElement& x, long max_steps = 100000);

// Scans the closed triangle hull{0, col1, col2} for lattice points; true iff
// only the three vertices lie in it. The scan covers the bounding box
// clamped to [-scan_bound, scan_bound] per axis. Requires |det| = 1.
bool lattice_triangle_check(const IMat& simplex2, long scan_bound);

// Exact verification of 1/(2 q_{n+1}^2) < 1/(q_n (q_n + q_{n+1}))
//   < |x - p_n/q_n| < 1/(q_n q_{n+1}) < 1/q_n^2.
bool rate_bounds_check(const NFElement& x, long n);

extern template std::pair<Rational, Branch> farey_step<Rational>(const Rational&);
extern template std::pair<NFElement, Branch> farey_step<NFElement>(const NFElement&);
extern template std::pair<Rational, long> gauss_step<Rational>(const Rational&);
extern template std::pair<NFElement, long> gauss_step<NFElement>(const NFElement&);
extern template CFExpansion cf_expand<Rational>(const Rational&, long);
extern template CFExpansion cf_expand<NFElement>(const NFElement&, long);

}  // namespace simplexgauss
