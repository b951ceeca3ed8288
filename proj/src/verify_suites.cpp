#include "simplexgauss/verify_suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace simplexgauss {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string point_str(const QVec& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += to_string(v[i]) + (i + 1 < v.size() ? "," : "");
    return s;
}

}  // namespace

VerificationReport rational_zero_suite(int dim, long max_denominator, long max_steps) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "rational-zero";
    MapSystem sys = make_map_system(dim);
    std::vector<long> coords(dim, 0);
    std::function<void(int, long, long)> rec = [&](int axis, long upper, long s) {
        if (axis == dim) {
            QVec v(dim + 1);
            for (int i = 0; i < dim; ++i) v[i] = Rational(coords[i]);
            v[dim] = Rational(s);
            ++rep.total;
            QVec c = canonicalize(v);
            long guard = 0;
            while (!is_zero(c[0])) {
                IVec before = integer_coords(c);
                bool interior = before[dim - 1] > 0 && before[0] < before[dim];
                for (int i = 0; i + 1 < dim && interior; ++i)
                    if (before[i] <= before[i + 1]) interior = false;
                ReturnStep<Rational> rs = return_step(sys, c);
                c = rs.point;
                IVec after = integer_coords(c);
                if (interior && !(after[dim] < before[dim])) {
                    rep.failures.push_back(
                        {point_str(v), "monotone decrease violated at an interior step"});
                    return;
                }
                if (++guard > max_steps) {
                    rep.failures.push_back({point_str(v), "did not reach zero"});
                    return;
                }
            }
            return;
        }
        for (long u = 0; u <= upper; ++u) {
            coords[axis] = u;
            rec(axis + 1, u, s);
        }
    };
    for (long s = 1; s <= max_denominator; ++s) rec(0, s, s);
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

VerificationReport best_approx_suite(long samples, unsigned long seed, long scan_bound) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "best-approx";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> kdist(1, 3);
    MapSystem sys1 = make_map_system(1), sys2 = make_map_system(2);
    for (long i = 0; i < samples; ++i) {
        bool one_d = (i % 2 == 0);
        std::vector<Symbol> prefix;
        long len = 1 + static_cast<long>(rng() % (one_d ? 12 : 10));
        for (long j = 0; j < len; ++j) {
            int fam = one_d ? 1 : 1 + static_cast<int>(rng() % 2);
            prefix.push_back(Symbol{fam, kdist(rng)});
        }
        const MapSystem& sys = one_d ? sys1 : sys2;
        IMat simplex = imat_mul(approx_matrix(sys, prefix), sys.base_simplex());
        ++rep.total;
        if (!is_unimodular(simplex)) {
            rep.failures.push_back({"prefix len " + std::to_string(len), "simplex not unimodular"});
            continue;
        }
        VerificationReport sub = best_approx_verify(simplex, scan_bound);
        for (auto& f : sub.failures) rep.failures.push_back(f);
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

VerificationReport rate_bounds_suite(long surds, long depth, unsigned long seed,
                                     const std::vector<Integer>& quad, Rational quad_lo,
                                     Rational quad_hi) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "rate-bounds";
    std::vector<std::pair<std::string, NFElement>> xs;
    auto golden = NumberField::create({-1, 1, 1}, Rational(0), Rational(1));
    xs.emplace_back("golden", NFElement::generator(golden));
    auto sqrt2 = NumberField::create({-1, 2, 1}, Rational(0), Rational(1));
    xs.emplace_back("sqrt2-1", NFElement::generator(sqrt2));
    if (!quad.empty()) {
        auto f = NumberField::create(quad, quad_lo, quad_hi);
        xs.emplace_back("explicit quad", NFElement::generator(f));
    }
    std::mt19937_64 rng(seed);
    long added = 0;
    while (added < surds) {
        long d = 2 + static_cast<long>(rng() % 120);
        long a0 = static_cast<long>(std::sqrt(static_cast<double>(d)));
        while (a0 * a0 > d) --a0;
        while ((a0 + 1) * (a0 + 1) <= d) ++a0;
        if (a0 * a0 == d) continue;
        // frac(sqrt(d)): root of x^2 + 2 a0 x + (a0^2 - d) in (0, 1)
        auto f = NumberField::create({Integer(a0) * a0 - d, 2 * Integer(a0), 1}, Rational(0),
                                     Rational(1));
        xs.emplace_back("frac(sqrt(" + std::to_string(d) + "))", NFElement::generator(f));
        ++added;
    }
    for (const auto& [name, x] : xs) {
        for (long n = 1; n <= depth; ++n) {
            ++rep.total;
            if (!rate_bounds_check(x, n))
                rep.failures.push_back({name, "bounds failed at n = " + std::to_string(n)});
        }
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

VerificationReport lattice_pick_suite(long samples, unsigned long seed, long scan_bound) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "lattice-pick";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> kdist(1, 4);
    for (long i = 0; i < samples; ++i) {
        CFExpansion cf;
        long len = 1 + static_cast<long>(rng() % 12);
        for (long j = 0; j < len; ++j) cf.terms.push_back(kdist(rng));
        IMat interval = approx_interval(cf, len);
        ++rep.total;
        if (!lattice_triangle_check(interval, scan_bound))
            rep.failures.push_back({"cf len " + std::to_string(len), "non-vertex lattice point"});
    }
    // rejection path: det != +-1 must throw
    ++rep.total;
    IMat bad(2, 2);
    bad(0, 0) = 1;
    bad(0, 1) = 0;
    bad(1, 0) = 0;
    bad(1, 1) = 2;
    try {
        lattice_triangle_check(bad, scan_bound);
        rep.failures.push_back({"det=2 matrix", "precondition violation was not rejected"});
    } catch (const std::domain_error&) {
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

VerificationReport group_identities_suite(long word_pairs, unsigned long seed) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "group-identities";
    MapSystem sys1 = make_map_system(1);
    const IMat A = sys1.generator_a(), B = sys1.generator_b();
    IMat Ainv = unimodular_inverse(A), Binv = unimodular_inverse(B);
    // T = B A^-1 B^-1 and S = (T A T)^-1
    IMat T = imat_mul(imat_mul(B, Ainv), Binv);
    IMat S = unimodular_inverse(imat_mul(imat_mul(T, A), T));
    IMat Texp(2, 2), Sexp(2, 2);
    Texp(0, 0) = 1;
    Texp(0, 1) = 1;
    Texp(1, 0) = 0;
    Texp(1, 1) = 1;
    Sexp(0, 0) = 0;
    Sexp(0, 1) = -1;
    Sexp(1, 0) = 1;
    Sexp(1, 1) = 0;
    ++rep.total;
    if (!imat_equal(T, Texp)) rep.failures.push_back({"T", "B A^-1 B^-1 != [[1,1],[0,1]]"});
    ++rep.total;
    if (!imat_equal(S, Sexp)) rep.failures.push_back({"S", "(T A T)^-1 != [[0,-1],[1,0]]"});

    std::mt19937_64 rng(seed);
    auto random_word = [&]() {
        IMat m = imat_identity(2);
        long len = 1 + static_cast<long>(rng() % 8);
        for (long j = 0; j < len; ++j) {
            switch (rng() % 4) {
                case 0: m = imat_mul(m, A); break;
                case 1: m = imat_mul(m, B); break;
                case 2: m = imat_mul(m, Ainv); break;
                default: m = imat_mul(m, Binv); break;
            }
        }
        return m;
    };
    for (int dim : {2, 3}) {
        MapSystem sysd = make_map_system(dim);
        for (long i = 0; i < word_pairs; ++i) {
            IMat m1 = random_word(), m2 = random_word();
            ++rep.total;
            if (!imat_equal(sl2_embedding(dim, imat_mul(m1, m2)),
                            imat_mul(sl2_embedding(dim, m1), sl2_embedding(dim, m2))))
                rep.failures.push_back({"dim " + std::to_string(dim),
                                        "embedding is not a homomorphism on a word pair"});
        }
        // the embedding carries the 1-D A_k family to the d-dimensional one
        for (long k = 1; k <= 10; ++k) {
            ++rep.total;
            IMat a1 = sys1.family_matrix(Symbol{1, k});
            if (!imat_equal(sl2_embedding(dim, a1), sysd.family_matrix(Symbol{1, k})))
                rep.failures.push_back(
                    {"dim " + std::to_string(dim) + " A_" + std::to_string(k),
                     "embedded 1-D family matrix differs from the closed form"});
        }
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

VerificationReport first_return_equiv_suite(int dim, long samples, unsigned long seed) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "first-return-equiv";
    MapSystem sys = make_map_system(dim);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> wdist(40, 4000);
    long produced = 0;
    while (produced < samples) {
        long w = wdist(rng);
        std::vector<long> cs(dim);
        for (int i = 0; i < dim; ++i) cs[i] = 1 + static_cast<long>(rng() % (w - 1));
        std::sort(cs.begin(), cs.end(), std::greater<long>());
        QVec v(dim + 1);
        for (int i = 0; i < dim; ++i) v[i] = Rational(cs[i]);
        v[dim] = Rational(w);
        QVec c = canonicalize(v);
        if (is_zero(c[0])) continue;
        Classification cl = classify_piece(sys, c);
        if (cl.boundary) continue;  // boundary conventions are tested separately
        ++produced;
        ++rep.total;
        ReturnStep<Rational> closed = return_step(sys, c);
        ReturnStep<Rational> iterated = return_step_by_iteration(sys, c);
        bool same_symbol = closed.symbol && iterated.symbol && *closed.symbol == *iterated.symbol;
        bool same_state = closed.point == iterated.point;
        if (!same_symbol || !same_state)
            rep.failures.push_back({point_str(v), !same_symbol ? "symbol mismatch"
                                                               : "state mismatch"});
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

VerificationReport subshift_face_suite(long face_samples, long interior_samples,
                                       unsigned long seed, long steps) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "subshift-face";
    MapSystem sys = make_map_system(3);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den(7, 97);
    for (long i = 0; i < face_samples; ++i) {
        long s = den(rng);
        long b = 1 + static_cast<long>(rng() % static_cast<unsigned long>(s - 2));
        long a = b + 1 + static_cast<long>(rng() % static_cast<unsigned long>(s - b - 1));
        QVec pt(4);
        const char* face;
        switch (i % 3) {
            case 0:
                pt << Rational(a), Rational(b), Rational(0), Rational(s);
                face = "AB";
                break;
            case 1:
                pt << Rational(a), Rational(b), Rational(b), Rational(s);
                face = "AC";
                break;
            default:
                pt << Rational(a), Rational(a), Rational(b), Rational(s);
                face = "BC";
                break;
        }
        ++rep.total;
        Orbit<Rational> orbit = run_orbit(sys, pt, steps, false);
        FacetClass c = facet_subshift_check(orbit.symbols);
        if (c == FacetClass::InteriorConsistent)
            rep.failures.push_back({std::string(face) + " " + point_str(pt),
                                    "face itinerary rejected by the automata"});
    }

    // interior points with {x, y, z, 1} rationally independent inside
    // Q(sqrt2 + sqrt3); the span covers {1, sqrt2, sqrt3, sqrt6}
    auto f = NumberField::create({1, 0, -10, 0, 1}, Rational(3), make_rational(16, 5));
    NFElement alpha = NFElement::generator(f);
    NFElement a3 = alpha * alpha * alpha;
    NFElement sqrt2 = (a3 - NFElement(9) * alpha) * NFElement(make_rational(1, 2));
    NFElement sqrt3 = (NFElement(11) * alpha - a3) * NFElement(make_rational(1, 2));
    NFElement sqrt6 = (alpha * alpha - NFElement(5)) * NFElement(make_rational(1, 2));
    std::uniform_int_distribution<long> num(1, 5);
    long produced = 0;
    while (produced < interior_samples) {
        // x ~ sqrt3-1, y ~ sqrt2-1, z ~ sqrt6/2-1 with rational perturbations
        NFElement x = (sqrt3 - NFElement(1)) * NFElement(make_rational(num(rng) + 15, 20)) +
                      NFElement(make_rational(num(rng), 50));
        NFElement y = (sqrt2 - NFElement(1)) * NFElement(make_rational(num(rng) + 15, 20)) +
                      NFElement(make_rational(num(rng), 60));
        NFElement z = (sqrt6 - NFElement(2)) * NFElement(make_rational(num(rng) + 10, 24)) +
                      NFElement(make_rational(num(rng), 70));
        if (z.sign() <= 0 || compare(y, z) <= 0 || compare(x, y) <= 0 ||
            compare(NFElement(1), x) <= 0)
            continue;
        ++produced;
        ++rep.total;
        NVec pt(4);
        pt << x, y, z, NFElement(1);
        Orbit<NFElement> orbit = run_orbit(sys, pt, steps, false);
        FacetClass c = facet_subshift_check(orbit.symbols);
        if (c != FacetClass::InteriorConsistent)
            rep.failures.push_back({"interior sample " + std::to_string(produced),
                                    "independent interior point classified " + to_string(c)});
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

VerificationReport edge_1d_suite(long samples, unsigned long seed) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "edge-1d";
    MapSystem sys2 = make_map_system(2), sys3 = make_map_system(3);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den(3, 400);
    for (long i = 0; i < samples; ++i) {
        long q = den(rng);
        long p = 1 + static_cast<long>(rng() % static_cast<unsigned long>(q - 1));
        Rational x = make_rational(p, q);
        auto [gx, n] = gauss_step(x);

        // 2-D edges: base (x, 0) in A_n, diagonal (x, x) in B_n, both -> (G(x), 0)
        QVec base(3), diag(3), frontal(3);
        base << x, Rational(0), Rational(1);
        diag << x, x, Rational(1);
        frontal << Rational(1), x, Rational(1);
        ++rep.total;
        ReturnStep<Rational> rb = return_step(sys2, canonicalize(base));
        {
            QVec got = canonicalize(rb.point);
            Rational xv = Rational(got[0]) / Rational(got[2]);
            bool sym_ok = rb.symbol && rb.symbol->family == 1 && rb.symbol->k == n;
            if (!(sym_ok && xv == gx && is_zero(got[1])))
                rep.failures.push_back({to_string(x), "2-D base edge is not the 1-D Gauss step"});
        }
        ++rep.total;
        ReturnStep<Rational> rd = return_step(sys2, canonicalize(diag));
        {
            QVec got = canonicalize(rd.point);
            Rational xv = Rational(got[0]) / Rational(got[2]);
            bool sym_ok = rd.symbol && rd.symbol->family == 2 && rd.symbol->k == n;
            if (!(sym_ok && xv == gx && is_zero(got[1])))
                rep.failures.push_back({to_string(x), "2-D diagonal edge mismatch"});
        }
        ++rep.total;
        ReturnStep<Rational> rf = return_step(sys2, canonicalize(frontal));
        {
            QVec got = canonicalize(rf.point);
            Rational xv = Rational(got[0]) / Rational(got[2]);
            Rational yv = Rational(got[1]) / Rational(got[2]);
            bool sym_ok = rf.symbol && rf.symbol->family == 2 && rf.symbol->k == 1;
            if (!(sym_ok && xv == Rational(1 - x) && yv == Rational(1 - x)))
                rep.failures.push_back({to_string(x), "2-D frontal edge reversal mismatch"});
        }

        // 3-D edges A, B, C project to the 1-D Gauss step; D, E, F reverse
        struct EdgeCase {
            QVec pt;
            int family;
            long index;
            Rational ex, ey, ez;
        };
        Rational one(1), zero(0), omx = Rational(1 - x);
        std::vector<EdgeCase> cases;
        QVec eA(4), eB(4), eC(4), eD(4), eE(4), eF(4);
        eA << x, zero, zero, one;
        eB << x, x, zero, one;
        eC << x, x, x, one;
        eD << one, x, zero, one;
        eE << one, x, x, one;
        eF << one, one, x, one;
        cases.push_back({eA, 1, n, gx, zero, zero});
        cases.push_back({eB, 2, n, gx, zero, zero});
        cases.push_back({eC, 3, n, gx, zero, zero});
        cases.push_back({eD, 2, 1, omx, omx, omx});
        cases.push_back({eE, 3, 1, omx, omx, zero});
        cases.push_back({eF, 3, 1, omx, omx, omx});
        for (const auto& ec : cases) {
            ++rep.total;
            ReturnStep<Rational> rs = return_step(sys3, canonicalize(ec.pt));
            QVec got = canonicalize(rs.point);
            Rational xv = Rational(got[0]) / Rational(got[3]);
            Rational yv = Rational(got[1]) / Rational(got[3]);
            Rational zv = Rational(got[2]) / Rational(got[3]);
            bool sym_ok = rs.symbol && rs.symbol->family == ec.family && rs.symbol->k == ec.index;
            if (!(sym_ok && xv == ec.ex && yv == ec.ey && zv == ec.ez))
                rep.failures.push_back({point_str(ec.pt), "3-D edge dynamics mismatch"});
        }

        // FR face rule: (x, y)_FR -> (1-y, x-y)_BC with symbol C_1
        long yq = 1 + static_cast<long>(rng() % static_cast<unsigned long>(q));
        if (yq >= p) yq = p > 1 ? p - 1 : 1;
        Rational y = make_rational(yq, q);
        if (y < x) {
            QVec fr(4);
            fr << one, x, y, one;
            ++rep.total;
            ReturnStep<Rational> rs = return_step(sys3, canonicalize(fr));
            QVec got = canonicalize(rs.point);
            Rational xv = Rational(got[0]) / Rational(got[3]);
            Rational yv = Rational(got[1]) / Rational(got[3]);
            Rational zv = Rational(got[2]) / Rational(got[3]);
            bool sym_ok = rs.symbol && rs.symbol->family == 3 && rs.symbol->k == 1;
            // BC face point (u, v) has coordinates (u, u, v)
            if (!(sym_ok && xv == Rational(1 - y) && yv == Rational(1 - y) &&
                  zv == Rational(x - y)))
                rep.failures.push_back({to_string(x) + "," + to_string(y), "FR -> BC rule mismatch"});
        }
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

std::vector<std::string> verify_suite_names() {
    return {"rational-zero",    "best-approx",        "rate-bounds",
            "lattice-pick",     "group-identities",   "first-return-equiv",
            "subshift-face",    "edge-1d"};
}

VerificationReport run_verify_suite(const std::string& name, const SuiteParams& p) {
    if (name == "rational-zero") return rational_zero_suite(p.dim, p.max_denominator);
    if (name == "best-approx") return best_approx_suite(p.samples, p.seed, p.scan_bound);
    if (name == "rate-bounds")
        return rate_bounds_suite(std::min<long>(p.samples, 20), p.n, p.seed, p.quad, p.quad_lo,
                                 p.quad_hi);
    if (name == "lattice-pick") return lattice_pick_suite(p.samples, p.seed, p.scan_bound);
    if (name == "group-identities") return group_identities_suite(p.samples, p.seed);
    if (name == "first-return-equiv") return first_return_equiv_suite(p.dim, p.samples, p.seed);
    if (name == "subshift-face")
        return subshift_face_suite(p.samples, std::min<long>(p.samples, 50), p.seed, p.steps);
    if (name == "edge-1d") return edge_1d_suite(p.samples, p.seed);
    throw std::domain_error("unknown suite: " + name);
}

}  // namespace simplexgauss
