#include "simplexgauss/cf1d.hpp"

#include <unordered_map>

namespace simplexgauss {

template <class S>
std::pair<S, Branch> farey_step(const S& x) {
    int s = sgn(x);
    if (s < 0 || sgn(S(S(1) - x)) < 0) throw std::domain_error("farey_step: x outside [0, 1]");
    S one_minus = S(1) - x;
    int cmp_half = sgn(S(x - one_minus));  // x <=> 1/2
    if (cmp_half <= 0) return {S(x / one_minus), Branch::A};
    return {S(one_minus / x), Branch::B};
}

template <class S>
std::pair<S, long> gauss_step(const S& x) {
    int s = sgn(x);
    if (s < 0 || sgn(S(S(1) - x)) < 0) throw std::domain_error("gauss_step: x outside [0, 1]");
    if (s == 0) return {S(0), 0};
    Integer n = floor_ratio(S(1), x);
    S value = S(1) / x - S(Rational(n));
    return {value, n.get_si()};
}

template <class S>
CFExpansion cf_expand(const S& x, long max_terms) {
    CFExpansion cf;
    S cur = x;
    for (long i = 0; i < max_terms; ++i) {
        if (is_zero(cur)) return cf;
        auto [next, n] = gauss_step(cur);
        cf.terms.push_back(n);
        cur = next;
    }
    if (!is_zero(cur)) cf.truncated = true;
    return cf;
}

std::vector<ConvergentPair> convergents(const CFExpansion& cf, long n) {
    if (n > static_cast<long>(cf.terms.size()))
        throw std::domain_error("convergents: not enough terms");
    std::vector<ConvergentPair> out;
    Integer p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // p_{-1}/q_{-1}, p_0/q_0
    out.push_back({p1, q1});
    for (long i = 0; i < n; ++i) {
        Integer a(cf.terms[i]);
        Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        out.push_back({p2, q2});
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return out;  // out[k] = p_k/q_k for k = 0..n
}

IMat convergent_matrix(const CFExpansion& cf, long n) {
    if (n < 1 || n > static_cast<long>(cf.terms.size()))
        throw std::domain_error("convergent_matrix: n out of range");
    MapSystem sys1 = make_map_system(1);
    IMat acc = imat_identity(2);
    for (long i = 0; i < n; ++i)
        acc = imat_mul(acc, sys1.family_matrix_inverse(Symbol{1, cf.terms[i]}));
    return acc;
}

IMat approx_interval(const CFExpansion& cf, long n) {
    MapSystem sys1 = make_map_system(1);
    return imat_mul(convergent_matrix(cf, n), sys1.base_simplex());
}

QuadPeriodicity quad_periodicity(const NFElement& x, long max_steps) {
    if (!x.field() || x.field()->degree() != 2)
        throw std::domain_error("quad_periodicity: need a quadratic field element");
    if (x.is_rational_value())
        throw std::domain_error("quad_periodicity: rational input terminates");
    std::unordered_map<std::string, long> seen;
    std::vector<long> terms;
    NFElement cur = x;
    for (long step = 0; step < max_steps; ++step) {
        std::string key;
        for (const auto& c : cur.coeffs()) key += to_string(c) + "|";
        auto [it, inserted] = seen.emplace(key, step);
        if (!inserted) {
            long pre = it->second;
            QuadPeriodicity out;
            out.preperiod.assign(terms.begin(), terms.begin() + pre);
            out.period.assign(terms.begin() + pre, terms.begin() + step);
            return out;
        }
        auto [next, n] = gauss_step(cur);
        terms.push_back(n);
        cur = next;
    }
    throw std::runtime_error("quad_periodicity: no revisit within the step cap");
}

bool lattice_triangle_check(const IMat& simplex2, long scan_bound) {
    if (simplex2.rows() != 2 || simplex2.cols() != 2)
        throw std::domain_error("lattice_triangle_check: need a 2x2 matrix");
    Integer d = det(simplex2);
    if (d != 1 && d != -1)
        throw std::domain_error("lattice_triangle_check: determinant is " + d.get_str());

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!mpz_fits_slong_p(simplex2(i, j).get_mpz_t()))
                throw std::domain_error("lattice_triangle_check: entries exceed word range");
    long c1x = simplex2(0, 0).get_si(), c1y = simplex2(1, 0).get_si();
    long c2x = simplex2(0, 1).get_si(), c2y = simplex2(1, 1).get_si();
    auto clamp = [scan_bound](long v) { return std::max(-scan_bound, std::min(scan_bound, v)); };
    long xlo = clamp(std::min({0L, c1x, c2x})), xhi = clamp(std::max({0L, c1x, c2x}));
    long ylo = clamp(std::min({0L, c1y, c2y})), yhi = clamp(std::max({0L, c1y, c2y}));

    // closed triangle membership via barycentric signs (Cramer, det = +-1)
    long dd = c1x * c2y - c1y * c2x;  // = det
    for (long x = xlo; x <= xhi; ++x)
        for (long y = ylo; y <= yhi; ++y) {
            long l1 = (x * c2y - y * c2x) * dd;  // dd^2 = 1, multiply to normalize sign
            long l2 = (c1x * y - c1y * x) * dd;
            if (l1 < 0 || l2 < 0 || l1 + l2 > 1) continue;
            bool vertex = (x == 0 && y == 0) || (x == c1x && y == c1y) || (x == c2x && y == c2y);
            if (!vertex) return false;
        }
    return true;
}

bool rate_bounds_check(const NFElement& x, long n) {
    if (n < 1) throw std::domain_error("rate_bounds_check: n must be >= 1");
    CFExpansion cf = cf_expand(x, n + 2);
    if (static_cast<long>(cf.terms.size()) < n + 1 || !cf.truncated)
        throw std::domain_error("rate_bounds_check: insufficient terms (rational input?)");
    auto conv = convergents(cf, n + 1);
    const Integer &pn = conv[n].p, &qn = conv[n].q;
    const Integer &qn1 = conv[n + 1].q;

    NFElement err = abs(x - NFElement(make_rational(pn, qn)));
    Rational lower2 = make_rational(1, qn * (qn + qn1));
    Rational lower1 = make_rational(1, 2 * qn1 * qn1);
    Rational upper1 = make_rational(1, qn * qn1);
    Rational upper2 = make_rational(1, qn * qn);
    if (!(lower1 < lower2)) return false;
    if (!(compare(err, NFElement(lower2)) > 0)) return false;
    if (!(compare(err, NFElement(upper1)) < 0)) return false;
    return upper1 < upper2 || n == 0;
}

template std::pair<Rational, Branch> farey_step<Rational>(const Rational&);
template std::pair<NFElement, Branch> farey_step<NFElement>(const NFElement&);
template std::pair<Rational, long> gauss_step<Rational>(const Rational&);
template std::pair<NFElement, long> gauss_step<NFElement>(const NFElement&);
template CFExpansion cf_expand<Rational>(const Rational&, long);
template CFExpansion cf_expand<NFElement>(const NFElement&, long);

}  // namespace simplexgauss
