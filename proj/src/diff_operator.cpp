#include "bk/diff_operator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bk/errors.hpp"

namespace bk {

DiffOperator::DiffOperator(std::vector<Poly> terms) : terms_(std::move(terms)) {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
  if (terms_.empty()) throw std::invalid_argument("operator has no nonzero coefficient");
}

const Poly& DiffOperator::coefficient(unsigned k) const {
  static const Poly zero;
  if (k == 0 || k > terms_.size()) return zero;
  return terms_[k - 1];
}

Rat DiffOperator::diagonal_coefficient(unsigned k) const {
  return coefficient(k).coeff(k);
}

DiffOperator DiffOperator::scaled(const Rat& s) const {
  if (s == 0) throw std::invalid_argument("scale must be nonzero");
  std::vector<Poly> t = terms_;
  for (auto& p : t) p *= s;
  return DiffOperator(std::move(t));
}

AdmissibilityReport validate(const DiffOperator& op) {
  AdmissibilityReport r;
  for (unsigned k = 1; k <= op.order(); ++k) {
    const auto deg = op.coefficient(k).degree();
    if (!deg) continue;
    if (*deg > k) r.violations.emplace_back(k, *deg);
    if (*deg == k) r.has_equality_k.push_back(k);
  }
  r.admissible = r.violations.empty() && !r.has_equality_k.empty();
  r.spectral_growth = op.leading().degree() == op.order();
  return r;
}

namespace {

void require_admissible(const DiffOperator& op) {
  const auto r = validate(op);
  if (!r.admissible) {
    throw NotAdmissible(r.violations.empty()
                            ? "operator has no k with deg a_k == k"
                            : "operator has deg a_k > k for some k");
  }
}

Rat eigenvalue_unchecked(const DiffOperator& op, std::size_t n) {
  Rat lambda = 0;
  for (unsigned k = 1; k <= op.order(); ++k) {
    const Rat c = op.diagonal_coefficient(k);
    if (c != 0) lambda += c * Rat(falling_factorial(n, k));
  }
  return lambda;
}

}  // namespace

Rat eigenvalue(const DiffOperator& op, std::size_t n) {
  require_admissible(op);
  return eigenvalue_unchecked(op, n);
}

Poly apply(const DiffOperator& op, const Poly& p) {
  Poly out;
  for (unsigned k = 1; k <= op.order(); ++k) {
    const Poly& a = op.coefficient(k);
    if (a.is_zero()) continue;
    const Poly d = derivative(p, k);
    if (d.is_zero()) break;
    out += a * d;
  }
  return out;
}

EigenSolution solve_eigenpolynomial(const DiffOperator& op, std::size_t n,
                                    DegeneracyPolicy policy) {
  require_admissible(op);
  const unsigned order = op.order();

  std::vector<Rat> lambda(n + 1);
  for (std::size_t j = 0; j <= n; ++j) lambda[j] = eigenvalue_unchecked(op, j);

  // [x^j] op(x^i) for i = j + s, s = 1..N, is sum over k >= s of
  // a_k[k - s] * i(i-1)...(i-k+1).
  auto off_diagonal = [&](std::size_t i, unsigned s) {
    Rat m = 0;
    for (unsigned k = s; k <= order; ++k) {
      const Rat a = op.coefficient(k).coeff(k - s);
      if (a != 0) m += a * Rat(falling_factorial(i, k));
    }
    return m;
  };

  std::vector<Rat> b(n + 1, Rat(0));
  b[n] = 1;
  std::vector<std::size_t> free_idx;
  std::vector<std::size_t> inconsistent_idx;
  for (std::size_t j = n; j-- > 0;) {
    Rat rhs = 0;
    for (unsigned s = 1; s <= order && j + s <= n; ++s) {
      if (b[j + s] == 0) continue;
      const Rat m = off_diagonal(j + s, s);
      if (m != 0) rhs += m * b[j + s];
    }
    const Rat gap = lambda[n] - lambda[j];
    if (gap != 0) {
      b[j] = rhs / gap;
    } else if (rhs == 0) {
      free_idx.push_back(j);
    } else {
      inconsistent_idx.push_back(j);
    }
  }
  std::sort(free_idx.begin(), free_idx.end());
  std::sort(inconsistent_idx.begin(), inconsistent_idx.end());

  if (!inconsistent_idx.empty() ||
      (!free_idx.empty() && policy == DegeneracyPolicy::kError)) {
    throw DegenerateSpectrum(n, free_idx, inconsistent_idx);
  }
  return EigenSolution{Poly(std::move(b)), lambda[n], std::move(free_idx)};
}

DiffOperator operator_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("", "operator must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "terms") throw ParseError(key, "unknown field");
  }
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("terms", "missing or not an array");
  }
  std::vector<Poly> terms;
  std::set<unsigned> seen;
  const auto& arr = j["terms"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    const auto& t = arr[i];
    if (!t.is_object()) throw ParseError(where, "expected an object");
    for (const auto& [key, _] : t.items()) {
      if (key != "k" && key != "coeffs") throw ParseError(where + "." + key, "unknown field");
    }
    if (!t.contains("k") || !t["k"].is_number_integer()) {
      throw ParseError(where + ".k", "missing or not an integer");
    }
    const long long k = t["k"].get<long long>();
    if (k < 1 || k > 1000) throw ParseError(where + ".k", "must lie in 1..1000");
    if (!seen.insert(static_cast<unsigned>(k)).second) {
      throw ParseError(where + ".k", "duplicate order " + std::to_string(k));
    }
    if (!t.contains("coeffs")) throw ParseError(where + ".coeffs", "missing");
    Poly p = poly_from_json(t["coeffs"], where + ".coeffs");
    if (terms.size() < static_cast<std::size_t>(k)) terms.resize(k);
    terms[k - 1] = std::move(p);
  }
  try {
    return DiffOperator(std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw ParseError("terms", e.what());
  }
}

nlohmann::json to_json(const DiffOperator& op) {
  nlohmann::json terms = nlohmann::json::array();
  for (unsigned k = op.order(); k >= 1; --k) {
    const Poly& a = op.coefficient(k);
    if (a.is_zero()) continue;
    terms.push_back({{"k", k}, {"coeffs", to_json(a)}});
  }
  return {{"terms", terms}};
}

nlohmann::json to_json(const AdmissibilityReport& report) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& [k, d] : report.violations) v.push_back({{"k", k}, {"degree", d}});
  return {{"admissible", report.admissible},
          {"violations", v},
          {"has_equality_k", report.has_equality_k},
          {"spectral_growth", report.spectral_growth}};
}

}  // namespace bk
