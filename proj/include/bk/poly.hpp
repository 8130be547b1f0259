#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bk/bigfloat.hpp"
#include "bk/rational.hpp"

namespace bk {

// Dense univariate polynomial with exact rational coefficients in ascending
// degree order. The zero polynomial has no coefficients and no degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs)
      : Poly(std::vector<Rat>(coeffs)) {}

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t power);
  static Poly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero past the degree.
  Rat coeff(std::size_t i) const;
  // Requires a nonzero polynomial.
  const Rat& leading() const;
  Poly monic() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rat& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Exact evaluation.
  Rat operator()(const Rat& x) const;

  // "x^3 - 3*x", "x^2 - 1/3", "0".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

// Exact j-th derivative; the zero polynomial when j > deg p.
Poly derivative(const Poly& p, unsigned j = 1);

// Horner evaluation at `prec` bits. The coefficients are rounded from their
// exact values and the recurrence runs with guard bits proportional to the
// degree before the final rounding to `prec`.
BigFloat evaluate(const Poly& p, const BigFloat& x, Precision prec);
BigComplex evaluate(const Poly& p, const BigComplex& x, Precision prec);

// Coefficients rounded to nearest at `prec` bits.
std::vector<BigFloat> to_bigfloat(const Poly& p, Precision prec);

// JSON array of coefficient strings, ascending degree.
nlohmann::json to_json(const Poly& p);
// Throws ParseError naming `field` on malformed input.
Poly poly_from_json(const nlohmann::json& j, const std::string& field = "coeffs");

}  // namespace bk
