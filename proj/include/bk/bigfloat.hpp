#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "bk/rational.hpp"

namespace bk {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

// Bits needed to carry `digits` significant decimal digits.
Precision bits_for_digits(unsigned digits);

// RAII handle over an MPFR value. The precision travels with the value:
// binary operations produce a result at the larger of the two operand
// precisions, rounded to nearest.
class BigFloat {
 public:
  explicit BigFloat(Precision prec = kDefaultPrecision);
  BigFloat(double value, Precision prec);
  BigFloat(long value, Precision prec);
  BigFloat(const Rat& value, Precision prec);
  BigFloat(const BigFloat& other);
  BigFloat(const BigFloat& other, Precision prec);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(Precision prec);
  // Decimal or scientific notation; throws ParseError.
  static BigFloat parse(const std::string& text, Precision prec);
  static BigFloat infinity(Precision prec);

  Precision precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits, e.g.
  // "1.7320508e+00". Deterministic for a fixed value and digit count.
  std::string to_string(unsigned digits) const;
  // Exact dyadic value as a rational. The value must be finite.
  Rat to_rat() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  // floor(log2 |x|) + 1 for nonzero finite x.
  long exponent() const { return mpfr_get_exp(value_); }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a,
                                           const BigFloat& b);

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log10(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat asin(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

// Complex value as a pair of BigFloats sharing one precision.
class BigComplex {
 public:
  explicit BigComplex(Precision prec = kDefaultPrecision)
      : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(const Rat& re, const Rat& im, Precision prec)
      : re_(re, prec), im_(im, prec) {}
  BigComplex(const BigComplex& other, Precision prec)
      : re_(other.re_, prec), im_(other.im_, prec) {}

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  BigFloat& real() { return re_; }
  BigFloat& imag() { return im_; }
  Precision precision() const { return re_.precision(); }
  bool is_real() const { return im_.is_zero(); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) {
    return a += b;
  }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) {
    return a -= b;
  }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) {
    return a *= b;
  }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) {
    return a /= b;
  }
  friend BigComplex operator-(const BigComplex& a) {
    return BigComplex(-a.re_, -a.im_);
  }
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  BigFloat re_;
  BigFloat im_;
};

BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);  // |z|^2
BigComplex conj(const BigComplex& z);
BigComplex scale(const BigComplex& z, const BigFloat& s);
BigComplex pow(const BigComplex& z, unsigned k);

}  // namespace bk
