#include "simplexgauss/decimal.hpp"

#include <mpfr.h>

#include <cstring>
#include <sstream>

namespace simplexgauss {

namespace {

// floor(|v| * 10^digits) as a decimal string with sign and point re-inserted
std::string trunc_decimal(const Integer& num, const Integer& den, int digits) {
    bool negative = sgn(num) < 0;
    Integer n = abs(num);
    Integer scaled = n * pow_int(10, static_cast<unsigned long>(digits));
    Integer whole = floor_div(scaled, den);
    std::string s = whole.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (negative && whole != 0) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

}  // namespace

std::string render_decimal(const Rational& v, int digits) {
    if (digits < 0) throw std::domain_error("render_decimal: negative digit count");
    return trunc_decimal(v.get_num(), v.get_den(), digits);
}

std::string render_decimal(const NFElement& v, int digits) {
    if (v.is_rational_value()) return render_decimal(v.rational_value(), digits);
    int s = v.sign();  // also proves v != 0, so the enclosure separates from 0
    Rational width = make_rational(1, pow_int(10, static_cast<unsigned long>(digits + 4)));
    while (true) {
        RatInterval e = v.enclosure(width);
        if ((s > 0 && sgn(e.lo) > 0) || (s < 0 && sgn(e.hi) < 0)) {
            std::string a = render_decimal(e.lo, digits);
            std::string b = render_decimal(e.hi, digits);
            if (a == b) return a;
        }
        width /= 1024;
    }
}

// ---- MpfrInterval ------------------------------------------------------------

struct MpfrInterval::Impl {
    mpfr_t lo, hi;
    Impl() {
        mpfr_init2(lo, kPrecBits);
        mpfr_init2(hi, kPrecBits);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    ~Impl() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
};

MpfrInterval::MpfrInterval() : impl_(new Impl) {}

MpfrInterval::MpfrInterval(const Rational& exact) : impl_(new Impl) {
    mpfr_set_q(impl_->lo, exact.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(impl_->hi, exact.get_mpq_t(), MPFR_RNDU);
}

MpfrInterval::MpfrInterval(const Rational& lo, const Rational& hi) : impl_(new Impl) {
    if (lo > hi) throw std::domain_error("MpfrInterval: lo > hi");
    mpfr_set_q(impl_->lo, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(impl_->hi, hi.get_mpq_t(), MPFR_RNDU);
}

MpfrInterval::MpfrInterval(const MpfrInterval& o) : impl_(new Impl) {
    mpfr_set(impl_->lo, o.impl_->lo, MPFR_RNDD);
    mpfr_set(impl_->hi, o.impl_->hi, MPFR_RNDU);
}

MpfrInterval& MpfrInterval::operator=(const MpfrInterval& o) {
    if (this != &o) {
        mpfr_set(impl_->lo, o.impl_->lo, MPFR_RNDD);
        mpfr_set(impl_->hi, o.impl_->hi, MPFR_RNDU);
    }
    return *this;
}

MpfrInterval::~MpfrInterval() { delete impl_; }

MpfrInterval MpfrInterval::from_integer(const Integer& z) {
    MpfrInterval r;
    mpfr_set_z(r.impl_->lo, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.impl_->hi, z.get_mpz_t(), MPFR_RNDU);
    return r;
}

MpfrInterval MpfrInterval::log() const {
    if (mpfr_sgn(impl_->lo) <= 0) throw std::domain_error("MpfrInterval::log of nonpositive");
    MpfrInterval r;
    mpfr_log(r.impl_->lo, impl_->lo, MPFR_RNDD);
    mpfr_log(r.impl_->hi, impl_->hi, MPFR_RNDU);
    return r;
}

MpfrInterval MpfrInterval::neg() const {
    MpfrInterval r;
    mpfr_neg(r.impl_->lo, impl_->hi, MPFR_RNDD);
    mpfr_neg(r.impl_->hi, impl_->lo, MPFR_RNDU);
    return r;
}

MpfrInterval operator+(const MpfrInterval& a, const MpfrInterval& b) {
    MpfrInterval r;
    mpfr_add(r.impl_->lo, a.impl_->lo, b.impl_->lo, MPFR_RNDD);
    mpfr_add(r.impl_->hi, a.impl_->hi, b.impl_->hi, MPFR_RNDU);
    return r;
}

MpfrInterval operator-(const MpfrInterval& a, const MpfrInterval& b) {
    MpfrInterval r;
    mpfr_sub(r.impl_->lo, a.impl_->lo, b.impl_->hi, MPFR_RNDD);
    mpfr_sub(r.impl_->hi, a.impl_->hi, b.impl_->lo, MPFR_RNDU);
    return r;
}

MpfrInterval operator*(const MpfrInterval& a, const MpfrInterval& b) {
    MpfrInterval r;
    mpfr_t cand;
    mpfr_init2(cand, MpfrInterval::kPrecBits);
    const mpfr_srcptr as[2] = {a.impl_->lo, a.impl_->hi};
    const mpfr_srcptr bs[2] = {b.impl_->lo, b.impl_->hi};
    bool first = true;
    for (auto& x : as)
        for (auto& y : bs) {
            mpfr_mul(cand, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand, r.impl_->lo) < 0) mpfr_set(r.impl_->lo, cand, MPFR_RNDD);
            mpfr_mul(cand, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand, r.impl_->hi) > 0) mpfr_set(r.impl_->hi, cand, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(cand);
    return r;
}

MpfrInterval operator/(const MpfrInterval& a, const MpfrInterval& b) {
    if (mpfr_sgn(b.impl_->lo) <= 0 && mpfr_sgn(b.impl_->hi) >= 0)
        throw std::domain_error("MpfrInterval: division by interval containing 0");
    MpfrInterval r;
    mpfr_t cand;
    mpfr_init2(cand, MpfrInterval::kPrecBits);
    const mpfr_srcptr as[2] = {a.impl_->lo, a.impl_->hi};
    const mpfr_srcptr bs[2] = {b.impl_->lo, b.impl_->hi};
    bool first = true;
    for (auto& x : as)
        for (auto& y : bs) {
            mpfr_div(cand, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand, r.impl_->lo) < 0) mpfr_set(r.impl_->lo, cand, MPFR_RNDD);
            mpfr_div(cand, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand, r.impl_->hi) > 0) mpfr_set(r.impl_->hi, cand, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(cand);
    return r;
}

bool MpfrInterval::certainly_greater(long bound) const {
    return mpfr_cmp_si(impl_->lo, bound) > 0;
}

bool MpfrInterval::certainly_less(long bound) const { return mpfr_cmp_si(impl_->hi, bound) < 0; }

double MpfrInterval::midpoint_double() const {
    mpfr_t mid;
    mpfr_init2(mid, kPrecBits);
    mpfr_add(mid, impl_->lo, impl_->hi, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    double d = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return d;
}

namespace {
std::string mpfr_to_string(mpfr_srcptr v, int significant_digits) {
    char buf[256];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", significant_digits, v);
    return buf;
}
}  // namespace

std::string MpfrInterval::midpoint_string(int significant_digits) const {
    mpfr_t mid;
    mpfr_init2(mid, kPrecBits);
    mpfr_add(mid, impl_->lo, impl_->hi, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    std::string s = mpfr_to_string(mid, significant_digits);
    mpfr_clear(mid);
    return s;
}

std::string MpfrInterval::lo_string(int significant_digits) const {
    return mpfr_to_string(impl_->lo, significant_digits);
}

std::string MpfrInterval::hi_string(int significant_digits) const {
    return mpfr_to_string(impl_->hi, significant_digits);
}

}  // namespace simplexgauss
