#include "bk/bigfloat.hpp"

#include <cmath>
#include <vector>

#include "bk/errors.hpp"

namespace bk {

Precision bits_for_digits(unsigned digits) {
  return static_cast<Precision>(std::ceil(digits * 3.321928094887362)) + 1;
}

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(long value, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& value, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(Precision prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(const std::string& text, Precision prec) {
  BigFloat r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0') {
    throw ParseError("", "not a floating-point literal: '" + text + "'");
  }
  return r;
}

BigFloat BigFloat::infinity(Precision prec) {
  BigFloat r(prec);
  mpfr_set_inf(r.value_, 1);
  return r;
}

std::string BigFloat::to_string(unsigned digits) const {
  if (digits == 0) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits - 1), value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Rat BigFloat::to_rat() const {
  if (is_zero()) return 0;
  BigInt mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
  Rat r(mant);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

namespace {

template <typename F>
BigFloat binary(const BigFloat& a, const BigFloat& b, F op) {
  BigFloat r(std::max(a.precision(), b.precision()));
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

template <typename F>
BigFloat unary(const BigFloat& a, F op) {
  BigFloat r(a.precision());
  op(r.get(), a.get(), MPFR_RNDN);
  return r;
}

template <typename F>
void in_place(BigFloat& a, const BigFloat& b, F op) {
  if (b.precision() > a.precision()) mpfr_prec_round(a.get(), b.precision(), MPFR_RNDN);
  op(a.get(), a.get(), b.get(), MPFR_RNDN);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  in_place(*this, rhs, mpfr_add);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  in_place(*this, rhs, mpfr_sub);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  in_place(*this, rhs, mpfr_mul);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  in_place(*this, rhs, mpfr_div);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }
BigFloat operator-(const BigFloat& a) { return unary(a, mpfr_neg); }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log10(const BigFloat& x) { return unary(x, mpfr_log10); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat asin(const BigFloat& x) { return unary(x, mpfr_asin); }
BigFloat atan2(const BigFloat& y, const BigFloat& x) { return binary(y, x, mpfr_atan2); }
BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  return binary(base, exponent, mpfr_pow);
}
BigFloat max(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_max); }
BigFloat min(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_min); }

BigComplex::BigComplex(BigFloat re, BigFloat im)
    : re_(std::move(re)), im_(std::move(im)) {
  if (re_.precision() != im_.precision()) {
    const Precision p = std::max(re_.precision(), im_.precision());
    re_ = BigFloat(re_, p);
    im_ = BigFloat(im_, p);
  }
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigFloat re = re_ * rhs.re_ - im_ * rhs.im_;
  BigFloat im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  const BigFloat d = norm(rhs);
  BigFloat re = (re_ * rhs.re_ + im_ * rhs.im_) / d;
  BigFloat im = (im_ * rhs.re_ - re_ * rhs.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigFloat abs(const BigComplex& z) {
  BigFloat r(z.precision());
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

BigFloat norm(const BigComplex& z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

BigComplex conj(const BigComplex& z) { return BigComplex(z.real(), -z.imag()); }

BigComplex scale(const BigComplex& z, const BigFloat& s) {
  return BigComplex(z.real() * s, z.imag() * s);
}

BigComplex pow(const BigComplex& z, unsigned k) {
  BigComplex result(Rat(1), Rat(0), z.precision());
  BigComplex base = z;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

}  // namespace bk
