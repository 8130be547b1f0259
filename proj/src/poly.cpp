#include "bk/poly.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "bk/errors.hpp"

namespace bk {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t power) {
  std::vector<Rat> v(power + 1, Rat(0));
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rat Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

const Rat& Poly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly Poly::monic() const {
  const Rat inv = 1 / leading();
  return *this * inv;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    const Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << bk::to_string(mag);
      continue;
    }
    if (mag != 1) out << bk::to_string(mag) << "*";
    out << "x";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

Poly derivative(const Poly& p, unsigned j) {
  const auto& c = p.coeffs();
  if (c.size() <= j) return Poly();
  std::vector<Rat> out(c.size() - j);
  for (std::size_t i = j; i < c.size(); ++i) {
    out[i - j] = c[i] * Rat(falling_factorial(i, j));
  }
  return Poly(std::move(out));
}

namespace {

Precision guarded(const Poly& p, Precision prec) {
  const auto n = static_cast<unsigned>(p.coeffs().size());
  return prec + 32 + 2 * static_cast<Precision>(std::bit_width(n));
}

}  // namespace

std::vector<BigFloat> to_bigfloat(const Poly& p, Precision prec) {
  std::vector<BigFloat> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c, prec);
  return out;
}

BigFloat evaluate(const Poly& p, const BigFloat& x, Precision prec) {
  const Precision work = guarded(p, prec);
  BigFloat acc(work);
  const BigFloat xw(x, work);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= xw;
    acc += BigFloat(*it, work);
  }
  return BigFloat(acc, prec);
}

BigComplex evaluate(const Poly& p, const BigComplex& x, Precision prec) {
  const Precision work = guarded(p, prec);
  BigComplex acc(work);
  const BigComplex xw(x, work);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= xw;
    acc.real() += BigFloat(*it, work);
  }
  return BigComplex(acc, prec);
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(bk::to_string(c));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected an array of coefficient strings");
  std::vector<Rat> coeffs;
  coeffs.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) throw ParseError(where, "expected a string");
    try {
      coeffs.push_back(parse_rat(j[i].get<std::string>()));
    } catch (const ParseError& e) {
      throw ParseError(where, e.what());
    }
  }
  return Poly(std::move(coeffs));
}

}  // namespace bk
