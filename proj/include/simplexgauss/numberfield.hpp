#pragma once

#include <iosfwd>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplexgauss/poly.hpp"
#include "simplexgauss/rational.hpp"

namespace simplexgauss {

// Thrown when sign refinement cannot separate a nonzero residue from zero,
// which indicates the element vanishes at the isolated root even though its
// residue is nonzero. That can only happen for a reducible (but squarefree)
// defining polynomial.
struct reducible_minpoly_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct field_mismatch_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A real algebraic number: squarefree integer polynomial plus an isolating
// interval containing exactly one of its real roots. Elements of Q(alpha)
// are polynomial residues of degree < deg(minpoly).
class NumberField {
  public:
    static constexpr int kDefaultMaxDegree = 8;
    static constexpr int kMaxBisections = 256;

    // Validates: squarefree, nonzero ends, exactly one root in (lo, hi) by
    // Sturm count. Throws std::domain_error on violation.
    static std::shared_ptr<const NumberField> create(std::vector<Integer> minpoly,
                                                     Rational lo, Rational hi,
                                                     int max_degree = kDefaultMaxDegree);

    int degree() const { return degree_; }
    const std::vector<Integer>& minpoly() const { return minpoly_; }
    const Poly& minpoly_q() const { return minpoly_q_; }
    Rational interval_lo() const { return lo_; }
    Rational interval_hi() const { return hi_; }
    bool irreducible_certified() const { return irreducible_certified_; }

    // Current refined enclosure of the root (monotone shrinking, shared).
    RatInterval root_enclosure() const;
    // Shrink the cached enclosure until hi - lo <= width.
    RatInterval refine_to(const Rational& width) const;

    // Sign of the residue value at the root. Throws reducible_minpoly_error
    // after kMaxBisections unresolved bisections.
    int sign_at_root(const Poly& residue) const;

    // Enclosure of residue(alpha) of width <= width.
    RatInterval value_enclosure(const Poly& residue, const Rational& width) const;

    std::string describe() const;

  private:
    NumberField() = default;

    void bisect_locked() const;

    std::vector<Integer> minpoly_;
    Poly minpoly_q_;
    int degree_ = 0;
    Rational lo_, hi_;
    bool irreducible_certified_ = false;

    mutable std::mutex mu_;
    mutable Rational ref_lo_, ref_hi_;
    mutable int sign_at_lo_ = 0;  // sign of minpoly at ref_lo_
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of Q(alpha), stored as a reduced residue (coeffs ascending, length
// = field degree). A null field marks a plain rational constant; constants
// promote automatically when mixed with field elements.
class NFElement {
  public:
    NFElement() : coeffs_{Rational(0)} {}
    NFElement(int v) : coeffs_{Rational(v)} {}            // NOLINT(google-explicit-constructor)
    NFElement(long v) : coeffs_{Rational(v)} {}           // NOLINT(google-explicit-constructor)
    NFElement(const Rational& v) : coeffs_{v} {}          // NOLINT(google-explicit-constructor)
    NFElement(const Integer& v) : coeffs_{Rational(v)} {} // NOLINT(google-explicit-constructor)

    NFElement(FieldPtr field, std::vector<Rational> coeffs);

    // The generator alpha itself.
    static NFElement generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_constant() const { return field_ == nullptr; }
    bool is_rational_value() const;          // constant residue (degree 0)
    Rational rational_value() const;         // requires is_rational_value()

    NFElement promoted(const FieldPtr& field) const;

    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator/(const NFElement& a, const NFElement& b);
    NFElement operator-() const;
    NFElement& operator+=(const NFElement& o) { return *this = *this + o; }
    NFElement& operator-=(const NFElement& o) { return *this = *this - o; }
    NFElement& operator*=(const NFElement& o) { return *this = *this * o; }
    NFElement& operator/=(const NFElement& o) { return *this = *this / o; }

    friend bool operator==(const NFElement& a, const NFElement& b);
    friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

    NFElement inverse() const;  // throws std::domain_error on zero

    int sign() const;
    bool is_zero_element() const;

    // Enclosure of the real value, width <= width. Exact for constants.
    RatInterval enclosure(const Rational& width) const;

    std::string to_string() const;  // e.g. "1 - 3*a + 2*a^2"

  private:
    static FieldPtr common_field(const NFElement& a, const NFElement& b);
    Poly residue_poly() const;

    FieldPtr field_;  // null => rational constant
    std::vector<Rational> coeffs_;
};

inline int sgn(const NFElement& x) { return x.sign(); }
inline bool is_zero(const NFElement& x) { return x.is_zero_element(); }
NFElement abs(const NFElement& x);
inline std::string to_string(const NFElement& x) { return x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const NFElement& x) {
    return os << x.to_string();
}

// floor(a/b) for b > 0, exact.
Integer floor_ratio(const NFElement& a, const NFElement& b);
Integer floor_nf(const NFElement& x);

// Three-way comparison through sign of the difference.
int compare(const NFElement& a, const NFElement& b);
inline int compare(const Rational& a, const Rational& b) { return sgn(Rational(a - b)); }

}  // namespace simplexgauss
