#include "simplexgauss/analysis.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace simplexgauss {

namespace {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

// ---- Lyapunov -----------------------------------------------------------------

LyapunovReport lyapunov_from_terms(const std::vector<long>& terms, long n, long window) {
    if (n < 2 || static_cast<long>(terms.size()) < n)
        throw std::domain_error("lyapunov: need at least n terms");
    if (window < 1 || window >= n) window = std::min<long>(10, n - 1);
    CFExpansion cf{terms, true};
    auto conv = convergents(cf, n);
    MpfrInterval log_qn = MpfrInterval::from_integer(conv[n].q).log();
    MpfrInterval log_qw = MpfrInterval::from_integer(conv[n - window].q).log();
    MpfrInterval two(Rational(2));
    MpfrInterval value = two * log_qn / MpfrInterval(Rational(n));
    MpfrInterval tail = two * (log_qn - log_qw) / MpfrInterval(Rational(window));
    LyapunovReport r;
    r.n = n;
    r.window = window;
    r.value_at_n = value.midpoint_string(30);
    r.tail_estimate = tail.midpoint_string(30);
    r.value_at_n_value = value.midpoint_double();
    r.tail_estimate_value = tail.midpoint_double();
    return r;
}

LyapunovReport lyapunov_estimate(const NFElement& x, long n, long window) {
    CFExpansion cf = cf_expand(x, n + 1);
    if (!cf.truncated)
        throw std::domain_error("lyapunov: rational input has a terminating expansion");
    return lyapunov_from_terms(cf.terms, n, window);
}

// ---- gamma rates ----------------------------------------------------------------

RateTable gamma_rates(const MapSystem& sys2, const NVec& point, long max_n) {
    if (sys2.dim() != 2) throw std::domain_error("gamma_rates: dimension-2 map required");
    if (max_n < 1) throw std::domain_error("gamma_rates: need max_n >= 1");
    NVec c = canonicalize(point);
    Orbit<NFElement> orbit = run_orbit(sys2, c, max_n + 1, false);
    if (orbit.status == OrbitStatus::Periodic) {
        // extend the symbol stream by cycling the period
        std::vector<Symbol> ext = orbit.symbols;
        auto per = orbit.period_symbols();
        while (static_cast<long>(ext.size()) < max_n)
            ext.push_back(per[(ext.size() - orbit.preperiod) % per.size()]);
        orbit.symbols = std::move(ext);
    }
    if (static_cast<long>(orbit.symbols.size()) < max_n)
        throw std::domain_error("gamma_rates: itinerary terminated (rational point?)");

    const NFElement x = c[0], y = c[1];
    RateTable table;
    Rational width = make_rational(1, pow_int(10, 60));
    IMat acc = imat_identity(3);
    for (long n = 1; n <= max_n; ++n) {
        acc = imat_mul(acc, sys2.family_matrix_inverse(orbit.symbols[n - 1]));
        IMat simplex = imat_mul(acc, sys2.base_simplex());
        GammaRow row;
        row.n = n;
        for (int i = 0; i < 3; ++i) {
            const Integer &p = simplex(0, i), &q = simplex(1, i), &r = simplex(2, i);
            if (is_zero(r)) throw std::runtime_error("gamma_rates: column with r = 0");
            GammaValue gv;
            if (r == 1 || r == -1) {
                gv.finite = false;
                gv.decimal = "inf";
            } else {
                NFElement err = abs(x - NFElement(make_rational(p, r))) +
                                abs(y - NFElement(make_rational(q, r)));
                RatInterval e = err.enclosure(width);
                Rational w = width;
                while (sgn(e.lo) <= 0) {
                    // error smaller than the working width; refine harder
                    w *= make_rational(1, pow_int(10, 20));
                    e = err.enclosure(w);
                }
                MpfrInterval loge = MpfrInterval(e.lo, e.hi).log();
                MpfrInterval logr = MpfrInterval::from_integer(abs(r)).log();
                MpfrInterval g = loge.neg() / logr;
                gv.finite = true;
                gv.decimal = g.midpoint_string(30);
                gv.certified_gt1 = g.certainly_greater(1);
                gv.certified_lt2 = g.certainly_less(2);
                gv.approx = g.midpoint_double();
            }
            row.gamma[i] = std::move(gv);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string rate_table_csv(const RateTable& table) {
    std::ostringstream os;
    os << "n,gamma1,gamma2,gamma3\n";
    for (const auto& row : table.rows) {
        os << row.n;
        for (const auto& g : row.gamma) os << ',' << g.decimal;
        os << '\n';
    }
    return os.str();
}

// ---- best approximation ----------------------------------------------------------

VerificationReport best_approx_verify(const IMat& simplex, long scan_bound) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "best-approx";
    int n = static_cast<int>(simplex.rows());
    Integer d = det(simplex);
    if (d != 1 && d != -1)
        throw std::domain_error("best_approx_verify: determinant is " + d.get_str());

    // fix each vertex representative so its last entry is nonnegative; the
    // hull is the one spanned by those representatives and the origin
    IMat simplex_n = simplex;
    for (int j = 0; j < n; ++j) {
        int last = n - 1;
        while (last > 0 && is_zero(simplex_n(last, j))) --last;
        if (simplex_n(last, j) < 0)
            for (int i = 0; i < n; ++i) simplex_n(i, j) = -simplex_n(i, j);
    }
    const long dsign = det(simplex_n).get_si();  // +-1
    IMat adj = adjugate(simplex_n);

    std::vector<long> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Integer mn = 0, mx = 0;
        for (int j = 0; j < n; ++j) {
            if (simplex_n(i, j) < mn) mn = simplex_n(i, j);
            if (simplex_n(i, j) > mx) mx = simplex_n(i, j);
        }
        if (!mpz_fits_slong_p(mn.get_mpz_t()) || !mpz_fits_slong_p(mx.get_mpz_t()))
            throw std::domain_error("best_approx_verify: entries exceed word range");
        lo[i] = std::max(-scan_bound, mn.get_si());
        hi[i] = std::min(scan_bound, mx.get_si());
    }
    // cap the scanned volume; shrink the widest axis toward the origin corner
    const long kMaxCandidates = 200'000;
    while (true) {
        long vol = 1;
        bool over = false;
        for (int i = 0; i < n; ++i) {
            long span = hi[i] - lo[i] + 1;
            if (vol > kMaxCandidates / span) {
                over = true;
                break;
            }
            vol *= span;
        }
        if (!over) break;
        int widest = 0;
        for (int i = 1; i < n; ++i)
            if (hi[i] - lo[i] > hi[widest] - lo[widest]) widest = i;
        if (hi[widest] - lo[widest] < 16) break;
        if (-lo[widest] > hi[widest])
            lo[widest] = -(3 * (-lo[widest]) / 4);
        else
            hi[widest] = 3 * hi[widest] / 4;
    }

    // word-sized copies; entries are bounded by scan_bound and the vertex
    // coordinates, so the n <= 4 determinant arithmetic stays in range
    constexpr long kWordLimit = 1L << 20;
    bool word_ok = n <= 4 && scan_bound <= kWordLimit;
    long s64[4][4], adj64[4][4];
    for (int i = 0; i < n && word_ok; ++i)
        for (int j = 0; j < n; ++j) {
            if (!mpz_fits_slong_p(adj(i, j).get_mpz_t())) {
                word_ok = false;
                break;
            }
            s64[i][j] = simplex_n(i, j).get_si();
            adj64[i][j] = adj(i, j).get_si();
            if (std::abs(s64[i][j]) > kWordLimit || std::abs(adj64[i][j]) > kWordLimit)
                word_ok = false;
        }
    if (!word_ok)
        throw std::domain_error("best_approx_verify: entries exceed the fast-scan range");

    // det of an n x n word matrix, n <= 4, by direct expansion
    auto det64 = [n](const long m[4][4]) -> long {
        if (n == 1) return m[0][0];
        if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (n == 3)
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        long acc = 0;
        for (int c = 0; c < 4; ++c) {
            long sub[4][4];
            for (int i = 1; i < 4; ++i) {
                int sj = 0;
                for (int j = 0; j < 4; ++j) {
                    if (j == c) continue;
                    sub[i - 1][sj++] = m[i][j];
                }
            }
            long minor = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                         sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                         sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
            acc += ((c % 2) ? -1 : 1) * m[0][c] * minor;
        }
        return acc;
    };

    long z[4] = {0, 0, 0, 0};
    std::function<void(int)> scan = [&](int axis) {
        if (rep.failures.size() > 16) return;
        if (axis == n) {
            ++rep.total;
            // (a) integrality route: eps = inv * z via the adjugate
            bool in_a = true;
            long sum_a = 0;
            for (int i = 0; i < n; ++i) {
                long e = 0;
                for (int j = 0; j < n; ++j) e += adj64[i][j] * z[j];
                e *= dsign;
                if (e < 0) {
                    in_a = false;
                    break;
                }
                sum_a += e;
            }
            if (in_a && sum_a > 1) in_a = false;
            // (b) brute-force barycentric route: fresh Cramer determinants
            bool in_b = true;
            long sum_b = 0;
            for (int i = 0; i < n && in_b; ++i) {
                long m[4][4];
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) m[r][c] = (c == i) ? z[r] : s64[r][c];
                long lam = det64(m) * dsign;
                if (lam < 0) in_b = false;
                sum_b += lam;
            }
            if (in_b && sum_b > 1) in_b = false;
            std::string zs;
            if (in_a != in_b) {
                for (int i = 0; i < n; ++i) zs += std::to_string(z[i]) + " ";
                rep.failures.push_back({zs, "route (a) and (b) disagree"});
                return;
            }
            if (in_a) {
                bool vertex = true;
                for (int i = 0; i < n; ++i) vertex &= z[i] == 0;
                for (int jcol = 0; jcol < n && !vertex; ++jcol) {
                    bool eq = true;
                    for (int i = 0; i < n; ++i)
                        if (s64[i][jcol] != z[i]) eq = false;
                    vertex = vertex || eq;
                }
                if (!vertex) {
                    for (int i = 0; i < n; ++i) zs += std::to_string(z[i]) + " ";
                    rep.failures.push_back({zs, "non-vertex lattice point inside hull"});
                }
            }
            return;
        }
        for (long v = lo[axis]; v <= hi[axis]; ++v) {
            z[axis] = v;
            scan(axis + 1);
        }
    };
    scan(0);
    rep.wall_ms = sw.ms();
    return rep;
}

// ---- conjecture harness -------------------------------------------------------------

std::vector<std::string> conjecture_suite_names() {
    return {"rational-zero", "rational-dependence-facet", "periodic-number-field",
            "subshift-face"};
}

namespace {

VerificationReport harness_rational_zero(const HarnessParams& params) {
    VerificationReport rep;
    rep.suite = "rational-zero";
    rep.evidence_only = true;
    MapSystem sys = make_map_system(params.dim);
    long max_steps_seen = 0;
    for (long s = 1; s <= params.max_denominator; ++s) {
        // all points 0 <= x_dim <= ... <= x_1 <= 1 with common denominator s
        std::vector<long> idx(params.dim, 0);
        std::function<void(int, long)> rec = [&](int axis, long upper) {
            if (axis == params.dim) {
                QVec v(params.dim + 1);
                for (int i = 0; i < params.dim; ++i) v[i] = Rational(idx[i]);
                v[params.dim] = Rational(s);
                ++rep.total;
                Orbit<Rational> orbit = run_orbit(sys, v, params.max_steps, false);
                if (orbit.status == OrbitStatus::ReachedZero) {
                    ++rep.supporting;
                    max_steps_seen =
                        std::max(max_steps_seen, static_cast<long>(orbit.symbols.size()));
                } else {
                    ++rep.contradicting;
                    std::string in;
                    for (int i = 0; i <= params.dim; ++i) in += to_string(v[i]) + " ";
                    rep.failures.push_back({in, "orbit did not reach zero"});
                }
                return;
            }
            for (long v = 0; v <= upper; ++v) {
                idx[axis] = v;
                rec(axis + 1, v);
            }
        };
        rec(0, s);
    }
    rep.notes.push_back("evidence: all rational points reached zero; max steps " +
                        std::to_string(max_steps_seen));
    return rep;
}

VerificationReport harness_rational_dependence(const HarnessParams& params) {
    VerificationReport rep;
    rep.suite = "rational-dependence-facet";
    rep.evidence_only = true;
    // rationally dependent cubic coordinates: y = (p/q) x + r/s over Q(2^(1/3)-1)
    auto field = NumberField::create({-1, 3, 3, 1}, Rational(0), Rational(1));
    NFElement alpha = NFElement::generator(field);
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<long> num(1, 4), den(2, 6);
    MapSystem sys = make_map_system(2);
    for (long i = 0; i < params.samples; ++i) {
        Rational a = make_rational(num(rng), den(rng) * 2);
        Rational b = make_rational(num(rng), den(rng) * 8);
        NFElement x = NFElement(a) * alpha + NFElement(b);  // x = a*alpha + b in (0,1)
        NFElement y = NFElement(make_rational(1, 2)) * x;   // y = x/2: dependent
        if (x.sign() <= 0 || compare(y, x) > 0 || compare(x, NFElement(1)) >= 0) continue;
        NVec v(3);
        v[0] = x;
        v[1] = y;
        v[2] = NFElement(1);
        ++rep.total;
        Orbit<NFElement> orbit = run_orbit(sys, v, params.max_steps, true);
        bool hit_facet = false;
        for (const auto& st : orbit.states)
            if (is_zero(st[1]) || st[0] == st[1] || (st[1] != 0 && st[0] == NFElement(1)))
                hit_facet = true;
        if (hit_facet)
            ++rep.supporting;
        else if (orbit.status == OrbitStatus::Periodic) {
            ++rep.contradicting;
            rep.failures.push_back({x.to_string() + " ; " + y.to_string(),
                                    "periodic without reaching a facet"});
        } else {
            rep.notes.push_back("undecided within step budget: " + x.to_string());
        }
    }
    rep.notes.push_back("evidence only: rational dependence y = x/2 sweep");
    return rep;
}

VerificationReport harness_periodic_number_field(const HarnessParams& params) {
    VerificationReport rep;
    rep.suite = "periodic-number-field";
    rep.evidence_only = true;
    auto field = NumberField::create({-1, 3, 3, 1}, Rational(0), Rational(1));
    NFElement alpha = NFElement::generator(field);
    MapSystem sys = make_map_system(2);
    std::vector<std::pair<NFElement, NFElement>> pts;
    pts.emplace_back(alpha, alpha * alpha);
    pts.emplace_back(alpha, alpha / (NFElement(1) + alpha));
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<long> small(1, 3);
    for (long i = 0; i < params.samples; ++i) {
        NFElement x = NFElement(make_rational(small(rng), 4)) * alpha +
                      NFElement(make_rational(1, 3 + small(rng)));
        NFElement y = x * alpha;  // independent of {1, x} over Q generically
        if (x.sign() <= 0 || compare(x, NFElement(1)) >= 0) continue;
        if (y.sign() <= 0 || compare(y, x) > 0) continue;
        pts.emplace_back(x, y);
    }
    for (const auto& [x, y] : pts) {
        NVec v(3);
        v[0] = x;
        v[1] = y;
        v[2] = NFElement(1);
        ++rep.total;
        Orbit<NFElement> orbit = run_orbit(sys, v, params.max_steps, false);
        if (orbit.status == OrbitStatus::Periodic)
            ++rep.supporting;
        else
            rep.notes.push_back("no revisit within budget: x = " + x.to_string() +
                                ", y = " + y.to_string());
    }
    rep.notes.push_back("evidence only: same-cubic-field points, periodicity by revisit");
    return rep;
}

VerificationReport harness_subshift_face(const HarnessParams& params) {
    VerificationReport rep;
    rep.suite = "subshift-face";
    rep.evidence_only = true;
    MapSystem sys = make_map_system(3);
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<long> den(5, 40);
    for (long i = 0; i < params.samples; ++i) {
        long s = den(rng);
        long b = 1 + static_cast<long>(rng() % static_cast<unsigned long>(s - 2));
        long a = b + 1 + static_cast<long>(rng() % static_cast<unsigned long>(s - b - 1));
        // face AB point (a/s, b/s, 0), face AC (a/s, b/s, b/s), face BC (a/s, a/s, b/s)
        std::vector<QVec> pts;
        QVec ab(4), ac(4), bc(4);
        ab << Rational(a), Rational(b), Rational(0), Rational(s);
        ac << Rational(a), Rational(b), Rational(b), Rational(s);
        bc << Rational(a), Rational(a), Rational(b), Rational(s);
        for (const QVec& v : {ab, ac, bc}) {
            ++rep.total;
            Orbit<Rational> orbit = run_orbit(sys, v, 50, false);
            FacetClass c = facet_subshift_check(orbit.symbols);
            if (c != FacetClass::InteriorConsistent)
                ++rep.supporting;
            else {
                ++rep.contradicting;
                std::string in;
                for (int j = 0; j < 4; ++j) in += to_string(v[j]) + " ";
                rep.failures.push_back({in, "face-sampled itinerary rejected by the automata"});
            }
        }
    }
    rep.notes.push_back("evidence only: face-sampled itineraries vs the sub-shift automata");
    return rep;
}

}  // namespace

VerificationReport conjecture_harness(const std::string& name, const HarnessParams& params) {
    Stopwatch sw;
    VerificationReport rep;
    if (name == "rational-zero")
        rep = harness_rational_zero(params);
    else if (name == "rational-dependence-facet")
        rep = harness_rational_dependence(params);
    else if (name == "periodic-number-field")
        rep = harness_periodic_number_field(params);
    else if (name == "subshift-face")
        rep = harness_subshift_face(params);
    else
        throw std::domain_error("unknown conjecture suite: " + name);
    rep.evidence_only = true;
    rep.wall_ms = sw.ms();
    return rep;
}

}  // namespace simplexgauss
