#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <mpfr.h>

#include <string>

namespace twistlab {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// floor(n / d) for d > 0.
inline Int floor_div(const Int& n, const Int& d) {
    Int f = n / d;
    if (n % d != 0 && n < 0) --f;
    return f;
}

inline Int floor_rat(const Rational& q) { return floor_div(num(q), den(q)); }

/// Representative of q in [0, 1).
inline Rational mod1(const Rational& q) { return q - Rational(floor_rat(q)); }

inline bool in_unit_interval(const Rational& q) { return q >= 0 && q < 1; }

/// "num/den", or just "num" when den == 1.
std::string to_string(const Rational& q);

/// Arbitrary-precision binary float with explicit bit precision.
/// Thin value wrapper over one mpfr_t; rounding is to nearest throughout.
class BigFloat {
  public:
    explicit BigFloat(unsigned prec_bits = 128);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(BigFloat o);
    ~BigFloat();

    static BigFloat from_rational(const Rational& q, unsigned prec_bits);
    static BigFloat from_decimal(const std::string& digits, unsigned prec_bits);
    /// 2^e, exact at any precision.
    static BigFloat two_pow(long e, unsigned prec_bits = 64);
    /// (sqrt(5) - 1) / 2 rounded to prec_bits.
    static BigFloat golden_conjugate(unsigned prec_bits);

    unsigned precision_bits() const;

    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat abs() const;
    /// Representative in [0, 1): subtracts the floor.
    BigFloat fractional() const;

    int compare(const BigFloat& o) const;
    bool operator<(const BigFloat& o) const { return compare(o) < 0; }
    bool operator<=(const BigFloat& o) const { return compare(o) <= 0; }
    bool operator==(const BigFloat& o) const { return compare(o) == 0; }

    double to_double() const;
    /// Value scaled by 2^120 and truncated to an integer; requires a value
    /// in [0, 1).
    unsigned __int128 to_fixed120() const;
    std::string to_string(unsigned digits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

} // namespace twistlab
