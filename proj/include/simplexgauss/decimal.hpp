#pragma once

#include <string>

#include "simplexgauss/numberfield.hpp"
#include "simplexgauss/rational.hpp"

namespace simplexgauss {

// Decimal rendering is directed (toward zero) so golden files never carry a
// rounded-up digit; exact strings travel alongside wherever these appear.
std::string render_decimal(const Rational& v, int digits);
std::string render_decimal(const NFElement& v, int digits);

// Interval arithmetic at fixed mpfr precision with outward rounding.
// Endpoints are always finite.
class MpfrInterval {
  public:
    static constexpr int kPrecBits = 192;  // ~57 decimal digits

    MpfrInterval();                        // [0, 0]
    explicit MpfrInterval(const Rational& exact);
    MpfrInterval(const Rational& lo, const Rational& hi);
    MpfrInterval(const MpfrInterval&);
    MpfrInterval& operator=(const MpfrInterval&);
    ~MpfrInterval();

    static MpfrInterval from_integer(const Integer& z);

    MpfrInterval log() const;  // requires lo > 0
    MpfrInterval neg() const;
    friend MpfrInterval operator+(const MpfrInterval& a, const MpfrInterval& b);
    friend MpfrInterval operator-(const MpfrInterval& a, const MpfrInterval& b);
    friend MpfrInterval operator*(const MpfrInterval& a, const MpfrInterval& b);
    friend MpfrInterval operator/(const MpfrInterval& a, const MpfrInterval& b);

    // certified strict comparisons against integers
    bool certainly_greater(long bound) const;
    bool certainly_less(long bound) const;

    double midpoint_double() const;
    std::string midpoint_string(int significant_digits) const;
    std::string lo_string(int significant_digits) const;
    std::string hi_string(int significant_digits) const;

  private:
    struct Impl;
    Impl* impl_;
};

}  // namespace simplexgauss
