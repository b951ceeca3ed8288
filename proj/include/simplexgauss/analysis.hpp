#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "simplexgauss/cf1d.hpp"
#include "simplexgauss/decimal.hpp"
#include "simplexgauss/monkemeyer.hpp"

namespace simplexgauss {

struct VerificationFailure {
    std::string input;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    long total = 0;
    std::vector<VerificationFailure> failures;
    // evidence-style suites (conjecture harness) additionally fill these and
    // never claim more than instance counts
    bool evidence_only = false;
    long supporting = 0;
    long contradicting = 0;
    std::vector<std::string> notes;
    double wall_ms = 0;

    bool passed() const { return failures.empty(); }
};

// ---- Lyapunov ---------------------------------------------------------------

// The definitional quantity is limsup (2/n) log q_n; at finite N we report
// the raw sequence value together with the windowed tail growth rate
// (2/w) log(q_N / q_{N-w}), which is what converges at practical N.
struct LyapunovReport {
    long n = 0;
    long window = 10;
    std::string value_at_n;     // (2/N) log q_N, 30 significant digits
    std::string tail_estimate;  // (2/w) log(q_N / q_{N-w})
    double tail_estimate_value = 0;
    double value_at_n_value = 0;
};

LyapunovReport lyapunov_estimate(const NFElement& x, long n, long window = 10);
LyapunovReport lyapunov_from_terms(const std::vector<long>& terms, long n, long window = 10);

// ---- gamma rates ------------------------------------------------------------

struct GammaValue {
    bool finite = false;  // false when the column denominator is 1
    std::string decimal;  // 30 significant digits, or "inf"
    bool certified_gt1 = false;
    bool certified_lt2 = false;
    double approx = 0;
};

struct GammaRow {
    long n = 0;
    std::array<GammaValue, 3> gamma;
};

struct RateTable {
    int working_digits = 50;
    std::vector<GammaRow> rows;
};

// gamma_i(n) = -log(|x - p_i/r_i| + |y - q_i/r_i|) / log(r_i) over the
// columns of the approximating simplexes of the point's own itinerary,
// evaluated with exact field arithmetic then interval logs.
RateTable gamma_rates(const MapSystem& sys2, const NVec& point, long max_n);

std::string rate_table_csv(const RateTable& table);

// ---- best approximation ------------------------------------------------------

// Dual-route lattice verification on hull{0, columns}: (a) integer-inverse
// integrality, (b) per-point barycentric Cramer scan. The scan region is the
// hull bounding box clamped to [-scan_bound, scan_bound] per axis.
VerificationReport best_approx_verify(const IMat& simplex, long scan_bound);

// ---- conjecture harness -------------------------------------------------------

// Named instance sweeps for the paper's conjectures. Output is evidence
// counts plus candidate dumps; suites never assert a conjecture's truth.
struct HarnessParams {
    int dim = 2;
    long max_denominator = 12;
    long max_steps = 400;
    long samples = 25;
    unsigned long seed = 1;
};

VerificationReport conjecture_harness(const std::string& name, const HarnessParams& params);

std::vector<std::string> conjecture_suite_names();

}  // namespace simplexgauss
