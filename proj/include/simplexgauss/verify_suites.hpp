#pragma once

#include "simplexgauss/analysis.hpp"

namespace simplexgauss {

// Parameterized verification sweeps behind `verify --suite <name>`. Each
// returns a VerificationReport whose failures list is empty iff the suite
// passed.
struct SuiteParams {
    int dim = 2;
    long samples = 1000;
    unsigned long seed = 1;
    long scan_bound = 1000;
    long max_denominator = 30;
    long n = 25;                       // rate-bounds depth
    long steps = 50;                   // subshift window
    std::vector<Integer> quad;         // optional explicit quadratic minpoly
    Rational quad_lo, quad_hi;
};

// every rational point with common denominator <= max_denominator reaches
// zero; the last canonical integer coordinate strictly decreases at every
// interior step
VerificationReport rational_zero_suite(int dim, long max_denominator, long max_steps = 2000);

// random itinerary prefixes (1-D length <= 12, 2-D length <= 10): |det| = 1
// and dual-route lattice scans find only vertices
VerificationReport best_approx_suite(long samples, unsigned long seed, long scan_bound);

// exact convergent error bounds for n = 1..depth on the golden ratio,
// sqrt(2)-1, and `surds` random quadratic surds
VerificationReport rate_bounds_suite(long surds, long depth, unsigned long seed,
                                     const std::vector<Integer>& quad = {},
                                     Rational quad_lo = Rational(0),
                                     Rational quad_hi = Rational(1));

// Pick-style triangle scans over random 1-D prefixes plus the non-unimodular
// rejection path
VerificationReport lattice_pick_suite(long samples, unsigned long seed, long scan_bound);

// T = B A^-1 B^-1, S = (T A T)^-1, and the SL(2,Z) corner embeddings into
// dimensions 2 and 3 on random word pairs
VerificationReport group_identities_suite(long word_pairs, unsigned long seed);

// closed-form return_step vs iterated monkemeyer_step on random non-boundary
// rational points
VerificationReport first_return_equiv_suite(int dim, long samples, unsigned long seed);

// face-sampled itineraries accepted by the facet automata; interior points
// with rationally independent quadratic coordinates rejected
VerificationReport subshift_face_suite(long face_samples, long interior_samples,
                                       unsigned long seed, long steps = 50);

// edge and face dynamics: 1-D Gauss behaviour of edges, the reversing edges,
// and the FR -> BC face rule
VerificationReport edge_1d_suite(long samples, unsigned long seed);

std::vector<std::string> verify_suite_names();
VerificationReport run_verify_suite(const std::string& name, const SuiteParams& params);

}  // namespace simplexgauss
