#include "bk/rational.hpp"

#include <cctype>
#include <regex>
#include <stdexcept>

#include "bk/errors.hpp"

namespace bk {

namespace {

const std::regex& rat_pattern() {
  static const std::regex re(R"(^([+-]?\d+)(?:/(\d+))?$)");
  return re;
}

const std::regex& decimal_pattern() {
  static const std::regex re(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
  return re;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, rat_pattern())) {
    throw ParseError("", "not a rational literal: '" + s + "'");
  }
  BigInt num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str(), 10);
  BigInt den(1);
  if (m[2].matched) {
    den = BigInt(m[2].str(), 10);
    if (den == 0) throw ParseError("", "zero denominator in '" + s + "'");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_decimal(std::string_view text) {
  std::string s(text);
  if (s.find('/') != std::string::npos) return parse_rat(s);
  std::smatch m;
  if (!std::regex_match(s, m, decimal_pattern()) ||
      (m[2].length() == 0 && m[3].length() == 0)) {
    throw ParseError("", "not a number: '" + s + "'");
  }
  const std::string digits = m[2].str() + m[3].str();
  long exp10 = -static_cast<long>(m[3].length());
  if (m[4].matched) exp10 += std::stol(m[4].str());
  BigInt num(digits.empty() ? "0" : digits, 10);
  BigInt pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rat r = exp10 >= 0 ? Rat(num * pow10) : Rat(num, pow10);
  r.canonicalize();
  if (m[1].str() == "-") r = -r;
  return r;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat ratio(long p, unsigned long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

BigInt falling_factorial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace bk
