#include "bk/classical.hpp"

#include <map>
#include <stdexcept>

#include "bk/errors.hpp"

namespace bk {

namespace {

void require_above_minus_one(const Rat& v, const char* name) {
  if (!(v > -1)) throw BadParameters(std::string(name) + " must be > -1, got " + to_string(v));
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

Family Family::jacobi(Rat alpha, Rat beta) {
  require_above_minus_one(alpha, "alpha");
  require_above_minus_one(beta, "beta");
  return Family{Kind::kJacobi, std::move(alpha), std::move(beta)};
}

Family Family::laguerre(Rat alpha) {
  require_above_minus_one(alpha, "alpha");
  return Family{Kind::kLaguerre, std::move(alpha), 0};
}

Family Family::parse(const std::string& text) {
  std::string s = trim(text);
  if (s.rfind("family=", 0) == 0) s = s.substr(7);
  const auto colon = s.find(':');
  const std::string name = trim(s.substr(0, colon));

  std::map<std::string, Rat> params;
  if (colon != std::string::npos) {
    const std::string rest = s.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string item =
          trim(rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("family", "expected name=value, got '" + item + "'");
      const std::string key = trim(item.substr(0, eq));
      Rat value;
      try {
        value = parse_decimal(trim(item.substr(eq + 1)));
      } catch (const ParseError&) {
        throw ParseError("family." + key, "not a number: '" + item.substr(eq + 1) + "'");
      }
      if (!params.emplace(key, value).second) throw ParseError("family." + key, "given twice");
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto take = [&](const char* key) {
    auto it = params.find(key);
    Rat v = it == params.end() ? Rat(0) : it->second;
    if (it != params.end()) params.erase(it);
    return v;
  };

  Family f;
  if (name == "jacobi") {
    Rat a = take("alpha");
    Rat b = take("beta");
    f = jacobi(a, b);
  } else if (name == "laguerre") {
    f = laguerre(take("alpha"));
  } else if (name == "legendre") {
    f = legendre();
  } else if (name == "chebyshev1" || name == "chebyshev-1") {
    f = chebyshev1();
  } else if (name == "chebyshev2" || name == "chebyshev-2") {
    f = chebyshev2();
  } else if (name == "hermite") {
    f = hermite();
  } else {
    throw ParseError("family", "unknown family '" + name + "'");
  }
  if (!params.empty()) {
    throw ParseError("family." + params.begin()->first, "not a parameter of " + name);
  }
  return f;
}

std::string Family::to_string() const {
  switch (kind) {
    case Kind::kJacobi:
      return "jacobi:alpha=" + bk::to_string(alpha) + ",beta=" + bk::to_string(beta);
    case Kind::kLegendre:
      return "legendre";
    case Kind::kChebyshev1:
      return "chebyshev1";
    case Kind::kChebyshev2:
      return "chebyshev2";
    case Kind::kHermite:
      return "hermite";
    case Kind::kLaguerre:
      return "laguerre:alpha=" + bk::to_string(alpha);
  }
  return "";
}

std::optional<std::pair<Rat, Rat>> Family::interval() const {
  if (!compact()) return std::nullopt;
  return std::make_pair(Rat(-1), Rat(1));
}

namespace {

// Every compact family is Jacobi(alpha, beta) for suitable parameters.
std::pair<Rat, Rat> jacobi_parameters(const Family& f) {
  switch (f.kind) {
    case Family::Kind::kJacobi:
      return {f.alpha, f.beta};
    case Family::Kind::kChebyshev1:
      return {Rat(-1, 2), Rat(-1, 2)};
    case Family::Kind::kChebyshev2:
      return {Rat(1, 2), Rat(1, 2)};
    default:
      return {Rat(0), Rat(0)};
  }
}

}  // namespace

RecurrenceCoefficients recurrence(const Family& f, std::size_t n) {
  const Rat m(static_cast<unsigned long>(n));
  switch (f.kind) {
    case Family::Kind::kHermite:
      return {0, m};
    case Family::Kind::kLaguerre:
      return {2 * m + f.alpha + 1, m * (m + f.alpha)};
    case Family::Kind::kLegendre:
      return {0, n == 0 ? Rat(0) : Rat(m * m / (4 * m * m - 1))};
    case Family::Kind::kChebyshev1:
      return {0, n == 0 ? Rat(0) : n == 1 ? Rat(1, 2) : Rat(1, 4)};
    case Family::Kind::kChebyshev2:
      return {0, n == 0 ? Rat(0) : Rat(1, 4)};
    case Family::Kind::kJacobi:
      break;
  }
  const Rat& a = f.alpha;
  const Rat& b = f.beta;
  const Rat s = a + b;
  if (n == 0) return {(b - a) / (s + 2), 0};
  const Rat t = 2 * m + s;
  const Rat an = (b * b - a * a) / (t * (t + 2));
  if (n == 1) {
    return {an, 4 * (1 + a) * (1 + b) / ((2 + s) * (2 + s) * (3 + s))};
  }
  return {an, 4 * m * (m + a) * (m + b) * (m + s) / (t * t * (t + 1) * (t - 1))};
}

RecurrenceOps::RecurrenceOps(const Family& f, std::size_t max_degree) {
  polys_.reserve(max_degree + 1);
  polys_.push_back(Poly::constant(1));
  for (std::size_t n = 0; n < max_degree; ++n) {
    const auto [a, b] = recurrence(f, n);
    Poly next = (Poly::x() - Poly::constant(a)) * polys_[n];
    if (n > 0) next -= b * polys_[n - 1];
    polys_.push_back(std::move(next));
  }
}

Poly classical_monic(const Family& f, std::size_t n) { return RecurrenceOps(f, n)[n]; }

MomentFunctional::MomentFunctional(std::vector<Rat> moments) : moments_(std::move(moments)) {
  if (moments_.empty()) throw std::invalid_argument("moment functional needs m_0");
}

Rat MomentFunctional::operator()(const Poly& p) const {
  if (p.is_zero()) return 0;
  if (p.coeffs().size() > moments_.size()) {
    throw InsufficientMoments(p.coeffs().size(), moments_.size());
  }
  Rat sum = 0;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) sum += p.coeffs()[k] * moments_[k];
  return sum;
}

MomentFunctional moments_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("", "moments file must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "moments") throw ParseError(key, "unknown field");
  }
  if (!j.contains("moments") || !j["moments"].is_array() || j["moments"].empty()) {
    throw ParseError("moments", "missing, empty or not an array");
  }
  const Poly as_poly = poly_from_json(j["moments"], "moments");
  // poly_from_json trims trailing zeros; moments keep their full length.
  std::vector<Rat> m = as_poly.coeffs();
  m.resize(j["moments"].size(), Rat(0));
  return MomentFunctional(std::move(m));
}

nlohmann::json to_json(const MomentFunctional& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : m.moments()) arr.push_back(to_string(v));
  return {{"moments", arr}};
}

Rat inner_product(const MomentFunctional& sigma, const Poly& p, const Poly& q) {
  return sigma(p * q);
}

Rat hankel_determinant(const MomentFunctional& sigma, std::size_t k) {
  if (k == 0) return 1;
  if (2 * k - 1 > sigma.size()) throw InsufficientMoments(2 * k - 1, sigma.size());
  std::vector<std::vector<Rat>> h(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) h[i][j] = sigma.moments()[i + j];
  // Fraction-exact Gaussian elimination.
  Rat det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && h[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(h[piv], h[c]);
      det = -det;
    }
    det *= h[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      if (h[r][c] == 0) continue;
      const Rat f = h[r][c] / h[c][c];
      for (std::size_t j = c; j < k; ++j) h[r][j] -= f * h[c][j];
    }
  }
  return det;
}

std::vector<Poly> gram_schmidt_ops(const MomentFunctional& sigma, std::size_t n) {
  if (sigma.size() < 2 * n + 1) throw InsufficientMoments(2 * n + 1, sigma.size());
  std::vector<Poly> p;
  std::vector<Rat> norms;
  for (std::size_t k = 0; k <= n; ++k) {
    Poly q = Poly::monomial(1, k);
    for (std::size_t j = 0; j < k; ++j) {
      q -= (inner_product(sigma, Poly::monomial(1, k), p[j]) / norms[j]) * p[j];
    }
    const Rat norm = inner_product(sigma, q, q);
    if (norm <= 0) throw NotPositiveDefinite(k);
    p.push_back(std::move(q));
    norms.push_back(norm);
  }
  return p;
}

DiffOperator bochner_operator(const Family& f) {
  const Poly one_minus_x2{Rat(1), Rat(0), Rat(-1)};
  switch (f.kind) {
    case Family::Kind::kHermite:
      return DiffOperator({Poly{Rat(0), Rat(-1)}, Poly::constant(1)});
    case Family::Kind::kLaguerre:
      return DiffOperator({Poly{f.alpha + 1, Rat(-1)}, Poly::x()});
    default:
      break;
  }
  const auto [a, b] = jacobi_parameters(f);
  return DiffOperator({Poly{b - a, -(a + b + 2)}, one_minus_x2});
}

MomentFunctional classical_moments(const Family& f, std::size_t count) {
  std::vector<Rat> m(count, Rat(0));
  switch (f.kind) {
    case Family::Kind::kHermite: {
      Rat dfact = 1;  // (k - 1)!!
      for (std::size_t k = 0; k < count; k += 2) {
        m[k] = dfact;
        dfact *= Rat(static_cast<unsigned long>(k + 1));
      }
      break;
    }
    case Family::Kind::kLaguerre: {
      Rat rising = 1;
      for (std::size_t k = 0; k < count; ++k) {
        m[k] = rising;
        rising *= f.alpha + Rat(static_cast<unsigned long>(k + 1));
      }
      break;
    }
    default: {
      // t = (1 + x) / 2 has density ~ t^beta (1 - t)^alpha on [0, 1], so
      // E t^j = prod_{i<j} (beta + 1 + i) / (alpha + beta + 2 + i).
      const auto [a, b] = jacobi_parameters(f);
      std::vector<Rat> et(count, Rat(1));
      for (std::size_t j = 1; j < count; ++j) {
        const Rat i(static_cast<unsigned long>(j - 1));
        et[j] = et[j - 1] * (b + 1 + i) / (a + b + 2 + i);
      }
      // x = 2t - 1.
      for (std::size_t k = 0; k < count; ++k) {
        Rat sum = 0;
        BigInt binom = 1;
        for (std::size_t j = 0; j <= k; ++j) {
          Rat term = Rat(binom) * et[j];
          mpq_mul_2exp(term.get_mpq_t(), term.get_mpq_t(), j);
          if ((k - j) % 2) term = -term;
          sum += term;
          binom = binom * static_cast<unsigned long>(k - j) / static_cast<unsigned long>(j + 1);
        }
        m[k] = sum;
      }
      break;
    }
  }
  return MomentFunctional(std::move(m));
}

Rat orthogonality_defect(const DiffOperator& op, const MomentFunctional& sigma,
                         std::size_t n_max) {
  std::vector<Poly> p;
  for (std::size_t n = 0; n <= n_max; ++n) p.push_back(eigenpolynomial(op, n));
  Rat worst = 0;
  for (std::size_t i = 0; i <= n_max; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Rat v = abs(inner_product(sigma, p[i], p[j]));
      if (v > worst) worst = v;
    }
  }
  return worst;
}

}  // namespace bk
