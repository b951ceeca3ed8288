#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "simplexgauss/cf1d.hpp"

using namespace simplexgauss;

namespace {

// independent oracle: continued fraction of p/q by integer euclid,
// convergents by the classical recurrence
std::vector<long> euclid_cf(long p, long q) {
    std::vector<long> terms;
    // x = p/q in [0,1]: terms of 1/x with floor division
    long num = q, den = p;
    while (den != 0) {
        terms.push_back(num / den);
        long r = num % den;
        num = den;
        den = r;
    }
    return terms;
}

std::pair<std::vector<Integer>, std::vector<Integer>> recurrence_convergents(
    const std::vector<long>& terms) {
    std::vector<Integer> ps = {0}, qs = {1};
    Integer pm1 = 1, qm1 = 0;
    for (long a : terms) {
        Integer p = Integer(a) * ps.back() + pm1;
        Integer q = Integer(a) * qs.back() + qm1;
        pm1 = ps.back();
        qm1 = qs.back();
        ps.push_back(p);
        qs.push_back(q);
    }
    return {ps, qs};
}

FieldPtr quad_field(long c0, long c1, Rational lo, Rational hi) {
    return NumberField::create({Integer(c0), Integer(c1), Integer(1)}, lo, hi);
}

}  // namespace

TEST_CASE("farey steps") {
    auto [v1, b1] = farey_step(make_rational(2, 5));
    CHECK(v1 == make_rational(2, 3));
    CHECK(b1 == Branch::A);
    auto [v2, b2] = farey_step(make_rational(2, 3));
    CHECK(v2 == make_rational(1, 2));
    CHECK(b2 == Branch::B);
    auto [v3, b3] = farey_step(make_rational(1, 2));
    CHECK(v3 == Rational(1));
    CHECK(b3 == Branch::A);
    CHECK_THROWS_AS(farey_step(make_rational(3, 2)), std::domain_error);
}

TEST_CASE("gauss steps and the half-open convention") {
    auto [v1, n1] = gauss_step(make_rational(2, 5));
    CHECK(v1 == make_rational(1, 2));
    CHECK(n1 == 2);
    auto [v2, n2] = gauss_step(make_rational(1, 2));
    CHECK(v2 == Rational(0));
    CHECK(n2 == 2);
    auto [v0, n0] = gauss_step(Rational(0));
    CHECK(v0 == Rational(0));
    CHECK(n0 == 0);
    // x = 1 is classified A_1 with G(1) = 0
    auto [v3, n3] = gauss_step(Rational(1));
    CHECK(v3 == Rational(0));
    CHECK(n3 == 1);

    // golden ratio is the fixed point of the n = 1 branch
    auto f = quad_field(-1, 1, Rational(0), Rational(1));
    NFElement g = NFElement::generator(f);
    auto [gv, gn] = gauss_step(g);
    CHECK(gn == 1);
    CHECK(gv == g);
}

TEST_CASE("cf expansion of rationals matches euclid and never ends in 1") {
    CHECK(cf_expand(make_rational(2, 5), 30).terms == std::vector<long>{2, 2});
    CHECK(cf_expand(Rational(0), 30).terms.empty());
    CHECK(cf_expand(Rational(1), 30).terms == std::vector<long>{1});

    std::mt19937_64 rng(17);
    for (int i = 0; i < 400; ++i) {
        long q = 2 + static_cast<long>(rng() % 997);
        long p = 1 + static_cast<long>(rng() % (q - 1));
        CFExpansion cf = cf_expand(make_rational(p, q), 100);
        CHECK_FALSE(cf.truncated);
        CHECK(cf.terms == euclid_cf(p, q));
        if (cf.terms.size() > 1) CHECK(cf.terms.back() >= 2);
        for (long t : cf.terms) CHECK(t >= 1);
    }
}

TEST_CASE("cf expansion of sqrt(2)-1 truncates with all twos") {
    auto f = quad_field(-1, 2, Rational(0), Rational(1));
    CFExpansion cf = cf_expand(NFElement::generator(f), 10);
    CHECK(cf.truncated);
    CHECK(cf.terms == std::vector<long>(10, 2));
}

TEST_CASE("shift property of the expansion") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        long q = 3 + static_cast<long>(rng() % 500);
        long p = 1 + static_cast<long>(rng() % (q - 1));
        Rational x = make_rational(p, q);
        CFExpansion full = cf_expand(x, 100);
        if (full.terms.size() < 2) continue;
        auto [shifted, n] = gauss_step(x);
        CFExpansion tail = cf_expand(Rational(shifted), 100);
        CHECK(n == full.terms.front());
        CHECK(tail.terms == std::vector<long>(full.terms.begin() + 1, full.terms.end()));
    }
}

TEST_CASE("convergent matrices match the recurrence and the sign law") {
    CFExpansion cf22{{2, 2}, false};
    CHECK(imat_equal(convergent_matrix(cf22, 1), [] {
        IMat m(2, 2);
        m(0, 0) = 0; m(0, 1) = 1; m(1, 0) = 1; m(1, 1) = 2;
        return m;
    }()));
    CFExpansion cf222{{2, 2, 2}, false};
    IMat m2 = convergent_matrix(cf222, 2);
    CHECK(m2(0, 0) == 1);
    CHECK(m2(0, 1) == 2);
    CHECK(m2(1, 0) == 2);
    CHECK(m2(1, 1) == 5);
    IMat m3 = convergent_matrix(cf222, 3);
    CHECK(m3(0, 1) == 5);
    CHECK(m3(1, 1) == 12);

    std::mt19937_64 rng(29);
    for (int i = 0; i < 60; ++i) {
        CFExpansion cf;
        long len = 1 + static_cast<long>(rng() % 25);
        for (long j = 0; j < len; ++j) cf.terms.push_back(1 + static_cast<long>(rng() % 6));
        auto [ps, qs] = recurrence_convergents(cf.terms);
        for (long n = 1; n <= len; ++n) {
            IMat m = convergent_matrix(cf, n);
            CHECK(m(0, 0) == ps[n - 1]);
            CHECK(m(0, 1) == ps[n]);
            CHECK(m(1, 0) == qs[n - 1]);
            CHECK(m(1, 1) == qs[n]);
            CHECK(det(m) == ((n % 2) ? Integer(-1) : Integer(1)));
        }
    }
}

TEST_CASE("approximating intervals carry convergent and mediant") {
    CFExpansion cf2{{2}, false};
    IMat i1 = approx_interval(cf2, 1);
    CHECK(i1(0, 0) == 1);
    CHECK(i1(1, 0) == 2);
    CHECK(i1(0, 1) == 1);
    CHECK(i1(1, 1) == 3);

    CFExpansion cf22{{2, 2}, false};
    IMat i2 = approx_interval(cf22, 2);
    CHECK(i2(0, 0) == 2);
    CHECK(i2(1, 0) == 5);
    CHECK(i2(0, 1) == 3);
    CHECK(i2(1, 1) == 7);
}

TEST_CASE("twisted nesting: the error sign alternates") {
    auto f = quad_field(-1, 2, Rational(0), Rational(1));  // sqrt(2) - 1
    NFElement x = NFElement::generator(f);
    CFExpansion cf = cf_expand(x, 22);
    auto conv = convergents(cf, 20);
    int prev = 0;
    for (long n = 1; n <= 20; ++n) {
        NFElement diff = NFElement(make_rational(conv[n].p, conv[n].q)) - x;
        int s = diff.sign();
        CHECK(s != 0);
        if (prev != 0) CHECK(s == -prev);
        prev = s;
        // nesting: x lies between consecutive convergents
        if (n >= 2) {
            NFElement lo = NFElement(make_rational(conv[n - 1].p, conv[n - 1].q));
            NFElement hi = NFElement(make_rational(conv[n].p, conv[n].q));
            CHECK(compare(x - lo, NFElement(0)) == -compare(x - hi, NFElement(0)));
        }
    }
}

TEST_CASE("gauss orbit of p/q reaches zero in exactly len(cf) steps") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        long q = 2 + static_cast<long>(rng() % 400);
        long p = static_cast<long>(rng() % q);
        Rational x = make_rational(p, q);
        size_t expected = euclid_cf(p == 0 ? 0 : p, q).size();
        if (p == 0) expected = 0;
        size_t steps = 0;
        Rational cur = x;
        while (!is_zero(cur)) {
            cur = gauss_step(cur).first;
            ++steps;
            REQUIRE(steps < 200);
        }
        CHECK(steps == expected);
    }
}

TEST_CASE("quadratic periodicity by revisit") {
    auto sqrt2 = quad_field(-1, 2, Rational(0), Rational(1));
    QuadPeriodicity p2 = quad_periodicity(NFElement::generator(sqrt2));
    CHECK(p2.preperiod.empty());
    CHECK(p2.period == std::vector<long>{2});

    auto golden = quad_field(-1, 1, Rational(0), Rational(1));
    QuadPeriodicity pg = quad_periodicity(NFElement::generator(golden));
    CHECK(pg.preperiod.empty());
    CHECK(pg.period == std::vector<long>{1});

    // sqrt(3) - 1: minpoly x^2 + 2x - 2
    auto sqrt3 = NumberField::create({-2, 2, 1}, Rational(0), Rational(1));
    QuadPeriodicity p3 = quad_periodicity(NFElement::generator(sqrt3));
    CHECK(p3.preperiod.empty());
    CHECK(p3.period == std::vector<long>{1, 2});

    // a preperiodic case: (sqrt(2) - 1) / 4 = [0; 9, (1, 1, 1, 10)...]
    NFElement x = NFElement::generator(sqrt2) * NFElement(make_rational(1, 4));
    QuadPeriodicity pp = quad_periodicity(x);
    CHECK(pp.preperiod == std::vector<long>{9});
    CHECK(pp.period == std::vector<long>{1, 1, 1, 10});

    CHECK_THROWS_AS(quad_periodicity(NFElement(make_rational(1, 3)).promoted(sqrt2)),
                    std::domain_error);
    auto cubic = NumberField::create({-1, 3, 3, 1}, Rational(0), Rational(1));
    CHECK_THROWS_AS(quad_periodicity(NFElement::generator(cubic)), std::domain_error);
}

TEST_CASE("state count stays within the coefficient-bound sanity cap") {
    // for x = sqrt(d)-a0 with x root of x^2 + 2a0 x + (a0^2-d): a = 1, b = 2a0
    // |c~| <= |a| + |2ax + b| <= 1 + 2a0 + 2; states <= 10 * (2B+1)^2 * 2
    for (long d : {2, 3, 5, 7, 19, 31, 46}) {
        long a0 = 1;
        while ((a0 + 1) * (a0 + 1) <= d) ++a0;
        auto f = NumberField::create({Integer(a0) * a0 - d, 2 * Integer(a0), 1}, Rational(0),
                                     Rational(1));
        QuadPeriodicity p = quad_periodicity(NFElement::generator(f));
        long bound = 1 + 2 * a0 + 2;
        long cap = 10 * (2 * bound + 1) * (2 * bound + 1) * 2;
        CHECK(static_cast<long>(p.preperiod.size() + p.period.size()) <= cap);
    }
}

TEST_CASE("lattice triangle scans") {
    IMat v(2, 2);
    v(0, 0) = 0; v(1, 0) = 1; v(0, 1) = 1; v(1, 1) = 1;
    CHECK(lattice_triangle_check(v, 1000));
    IMat big(2, 2);
    big(0, 0) = 2; big(1, 0) = 5; big(0, 1) = 5; big(1, 1) = 12;
    CHECK(lattice_triangle_check(big, 1000));
    IMat bad(2, 2);
    bad(0, 0) = 1; bad(1, 0) = 0; bad(0, 1) = 0; bad(1, 1) = 2;
    CHECK_THROWS_AS(lattice_triangle_check(bad, 1000), std::domain_error);
}

TEST_CASE("rate of convergence bounds hold exactly") {
    auto sqrt2 = quad_field(-1, 2, Rational(0), Rational(1));
    CHECK(rate_bounds_check(NFElement::generator(sqrt2), 3));
    auto golden = quad_field(-1, 1, Rational(0), Rational(1));
    for (long n = 1; n <= 20; ++n) CHECK(rate_bounds_check(NFElement::generator(golden), n));
    CHECK_THROWS_AS(rate_bounds_check(NFElement(make_rational(2, 5)).promoted(sqrt2), 3),
                    std::domain_error);
}
