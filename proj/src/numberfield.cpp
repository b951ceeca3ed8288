#include "simplexgauss/numberfield.hpp"

#include <ostream>
#include <sstream>

namespace simplexgauss {

std::shared_ptr<const NumberField> NumberField::create(std::vector<Integer> minpoly,
                                                       Rational lo, Rational hi,
                                                       int max_degree) {
    while (!minpoly.empty() && is_zero(minpoly.back())) minpoly.pop_back();
    if (minpoly.size() < 2) throw std::domain_error("minpoly must have degree >= 1");
    int d = static_cast<int>(minpoly.size()) - 1;
    if (d > max_degree)
        throw std::domain_error("minpoly degree " + std::to_string(d) +
                                " exceeds configured maximum " + std::to_string(max_degree));
    if (!(lo < hi)) throw std::domain_error("isolating interval must satisfy lo < hi");

    // normalize content and sign
    Integer content = 0;
    for (const auto& c : minpoly) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : minpoly) c /= content;
    if (minpoly.back() < 0)
        for (auto& c : minpoly) c = -c;

    Poly p = poly_from_integers(minpoly);
    if (!is_squarefree(p)) throw std::domain_error("minpoly is not squarefree");
    if (is_zero(eval(p, lo)) || is_zero(eval(p, hi)))
        throw std::domain_error("minpoly vanishes at an interval endpoint");
    int roots = sturm_count(p, lo, hi);
    if (roots != 1)
        throw std::domain_error("isolating interval contains " + std::to_string(roots) +
                                " roots, expected exactly 1");

    auto nf = std::shared_ptr<NumberField>(new NumberField());
    nf->minpoly_ = std::move(minpoly);
    nf->minpoly_q_ = std::move(p);
    nf->degree_ = d;
    nf->lo_ = lo;
    nf->hi_ = hi;
    nf->ref_lo_ = lo;
    nf->ref_hi_ = hi;
    nf->sign_at_lo_ = sgn(eval(nf->minpoly_q_, lo));
    nf->irreducible_certified_ = irreducible_mod_prime_certificate(nf->minpoly_);
    return nf;
}

RatInterval NumberField::root_enclosure() const {
    std::lock_guard<std::mutex> g(mu_);
    return {ref_lo_, ref_hi_};
}

void NumberField::bisect_locked() const {
    Rational mid = (ref_lo_ + ref_hi_) / 2;
    Rational v = eval(minpoly_q_, mid);
    int s = sgn(v);
    if (s == 0) {
        // the root is exactly mid (rational); collapse to a degenerate pinch
        Rational w = (ref_hi_ - ref_lo_) / 1024;
        ref_lo_ = mid - w;
        ref_hi_ = mid + w;
        // keep invariant: signs differ across the interval; re-derive lo sign
        sign_at_lo_ = sgn(eval(minpoly_q_, ref_lo_));
        return;
    }
    if (s == sign_at_lo_)
        ref_lo_ = mid;
    else
        ref_hi_ = mid;
}

RatInterval NumberField::refine_to(const Rational& width) const {
    std::lock_guard<std::mutex> g(mu_);
    while (ref_hi_ - ref_lo_ > width) bisect_locked();
    return {ref_lo_, ref_hi_};
}

int NumberField::sign_at_root(const Poly& residue) const {
    if (simplexgauss::degree(residue) < 0) return 0;
    if (simplexgauss::degree(residue) == 0) return sgn(residue[0]);
    std::lock_guard<std::mutex> g(mu_);
    for (int iter = 0; iter <= kMaxBisections; ++iter) {
        RatInterval v = eval_interval(residue, ref_lo_, ref_hi_);
        if (sgn(v.lo) > 0) return 1;
        if (sgn(v.hi) < 0) return -1;
        bisect_locked();
    }
    throw reducible_minpoly_error(
        "reducible minpoly suspected: nonzero residue straddles 0 after " +
        std::to_string(kMaxBisections) + " bisections");
}

RatInterval NumberField::value_enclosure(const Poly& residue, const Rational& width) const {
    std::lock_guard<std::mutex> g(mu_);
    while (true) {
        RatInterval v = eval_interval(residue, ref_lo_, ref_hi_);
        if (v.hi - v.lo <= width) return v;
        bisect_locked();
    }
}

std::string NumberField::describe() const {
    std::ostringstream os;
    os << "Q(a), ";
    for (size_t i = 0; i < minpoly_.size(); ++i) {
        if (i) os << " + ";
        os << minpoly_[i].get_str();
        if (i == 1) os << "*a";
        if (i > 1) os << "*a^" << i;
    }
    os << " = 0, a in (" << to_string(lo_) << ", " << to_string(hi_) << ")";
    return os.str();
}

// ---- NFElement -------------------------------------------------------------

NFElement::NFElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::domain_error("NFElement needs a field");
    if (static_cast<int>(coeffs_.size()) > field_->degree()) {
        // reduce mod minpoly
        Poly r = divmod(Poly(coeffs_.begin(), coeffs_.end()), field_->minpoly_q()).second;
        coeffs_.assign(field_->degree(), Rational(0));
        for (size_t i = 0; i < r.size(); ++i) coeffs_[i] = r[i];
    } else {
        coeffs_.resize(field_->degree(), Rational(0));
    }
}

NFElement NFElement::generator(const FieldPtr& field) {
    if (field->degree() == 1) {
        // alpha is the rational root of the linear minpoly
        Rational v = -Rational(field->minpoly()[0]) / Rational(field->minpoly()[1]);
        return NFElement(field, {v});
    }
    std::vector<Rational> c(field->degree(), Rational(0));
    c[1] = 1;
    return NFElement(field, std::move(c));
}

bool NFElement::is_rational_value() const {
    if (!field_) return true;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!is_zero(coeffs_[i])) return false;
    return true;
}

Rational NFElement::rational_value() const {
    if (!is_rational_value()) throw std::domain_error("not a rational value");
    return coeffs_[0];
}

NFElement NFElement::promoted(const FieldPtr& field) const {
    if (field_ == field) return *this;
    if (field_) throw field_mismatch_error("cannot promote between distinct fields");
    std::vector<Rational> c(field->degree(), Rational(0));
    c[0] = coeffs_[0];
    return NFElement(field, std::move(c));
}

FieldPtr NFElement::common_field(const NFElement& a, const NFElement& b) {
    if (a.field_ && b.field_) {
        if (a.field_ != b.field_) throw field_mismatch_error("field mismatch in arithmetic");
        return a.field_;
    }
    return a.field_ ? a.field_ : b.field_;
}

Poly NFElement::residue_poly() const {
    Poly p(coeffs_.begin(), coeffs_.end());
    normalize(p);
    return p;
}

NFElement operator+(const NFElement& a, const NFElement& b) {
    FieldPtr f = NFElement::common_field(a, b);
    if (!f) return NFElement(Rational(a.coeffs_[0] + b.coeffs_[0]));
    NFElement x = a.promoted(f), y = b.promoted(f);
    for (int i = 0; i < f->degree(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

NFElement operator-(const NFElement& a, const NFElement& b) {
    FieldPtr f = NFElement::common_field(a, b);
    if (!f) return NFElement(Rational(a.coeffs_[0] - b.coeffs_[0]));
    NFElement x = a.promoted(f), y = b.promoted(f);
    for (int i = 0; i < f->degree(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

NFElement NFElement::operator-() const {
    NFElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

NFElement operator*(const NFElement& a, const NFElement& b) {
    FieldPtr f = NFElement::common_field(a, b);
    if (!f) return NFElement(Rational(a.coeffs_[0] * b.coeffs_[0]));
    NFElement x = a.promoted(f), y = b.promoted(f);
    return NFElement(f, [&] {
        Poly prod = mul(Poly(x.coeffs_.begin(), x.coeffs_.end()),
                        Poly(y.coeffs_.begin(), y.coeffs_.end()));
        Poly r = divmod(prod, f->minpoly_q()).second;
        std::vector<Rational> c(f->degree(), Rational(0));
        for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
        return c;
    }());
}

NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }

bool operator==(const NFElement& a, const NFElement& b) {
    if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
    FieldPtr f = NFElement::common_field(a, b);
    return a.promoted(f).coeffs_ == b.promoted(f).coeffs_;
}

NFElement NFElement::inverse() const {
    if (!field_) {
        if (is_zero(coeffs_[0])) throw std::domain_error("division by zero");
        return NFElement(Rational(1 / coeffs_[0]));
    }
    Poly r = residue_poly();
    if (degree(r) < 0) throw std::domain_error("division by zero");
    if (degree(r) == 0) return NFElement(field_, {1 / r[0]});
    ExtGcd e = poly_ext_gcd(r, field_->minpoly_q());
    if (degree(e.g) != 0)
        throw reducible_minpoly_error(
            "reducible minpoly suspected: residue shares a factor with the minimal polynomial");
    // e.u * r == 1 mod minpoly (g is monic constant 1)
    Poly u = divmod(e.u, field_->minpoly_q()).second;
    std::vector<Rational> c(field_->degree(), Rational(0));
    for (size_t i = 0; i < u.size(); ++i) c[i] = u[i];
    return NFElement(field_, std::move(c));
}

int NFElement::sign() const {
    if (!field_) return sgn(coeffs_[0]);
    return field_->sign_at_root(residue_poly());
}

bool NFElement::is_zero_element() const {
    for (const auto& c : coeffs_)
        if (!is_zero(c)) return false;
    return true;
}

RatInterval NFElement::enclosure(const Rational& width) const {
    if (is_rational_value()) return {coeffs_[0], coeffs_[0]};
    return field_->value_enclosure(residue_poly(), width);
}

std::string NFElement::to_string() const {
    if (is_rational_value()) return simplexgauss::to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (is_zero(coeffs_[i])) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (i == 0 || a != 1) {
            os << simplexgauss::to_string(a);
            if (i > 0) os << "*";
        }
        if (i == 1) os << "a";
        if (i > 1) os << "a^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

NFElement abs(const NFElement& x) { return x.sign() < 0 ? -x : x; }

int compare(const NFElement& a, const NFElement& b) { return (a - b).sign(); }

Integer floor_ratio(const NFElement& a, const NFElement& b) {
    if (b.sign() <= 0) throw std::domain_error("floor_ratio needs positive divisor");
    NFElement q = a / b;
    return floor_nf(q);
}

Integer floor_nf(const NFElement& x) {
    if (x.is_rational_value()) return floor_rational(x.rational_value());
    Rational width(1, 4);
    while (true) {
        RatInterval e = x.enclosure(width);
        Integer fl = floor_rational(e.lo), fh = floor_rational(e.hi);
        if (fl == fh) return fl;
        // x might equal fh exactly only for rational values, excluded above
        width /= 16;
        if (width.get_den() > pow_int(2, 4096))
            throw reducible_minpoly_error("floor did not separate; reducible minpoly suspected");
    }
}

}  // namespace simplexgauss
