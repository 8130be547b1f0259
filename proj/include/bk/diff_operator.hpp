#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bk/poly.hpp"

namespace bk {

// sum_{k=1}^{N} a_k(x) d^k/dx^k with polynomial coefficients. There is no
// k = 0 term. a_N is never the zero polynomial.
class DiffOperator {
 public:
  // terms[k-1] multiplies the k-th derivative. Trailing zero coefficients are
  // dropped; throws std::invalid_argument when every coefficient is zero.
  explicit DiffOperator(std::vector<Poly> terms);

  unsigned order() const { return static_cast<unsigned>(terms_.size()); }
  // a_k, or the zero polynomial for k outside 1..N.
  const Poly& coefficient(unsigned k) const;
  const Poly& leading() const { return terms_.back(); }
  // c_k: the x^k coefficient of a_k.
  Rat diagonal_coefficient(unsigned k) const;

  DiffOperator scaled(const Rat& s) const;

  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

 private:
  std::vector<Poly> terms_;
};

// Admissible iff no a_k exceeds degree k and at least one reaches it.
struct AdmissibilityReport {
  bool admissible = false;
  std::vector<std::pair<unsigned, std::size_t>> violations;  // (k, deg a_k)
  std::vector<unsigned> has_equality_k;
  bool spectral_growth = false;  // deg a_N == N
};

AdmissibilityReport validate(const DiffOperator& op);

// lambda_n = sum_k c_k n (n-1) ... (n-k+1). Throws NotAdmissible.
Rat eigenvalue(const DiffOperator& op, std::size_t n);

// sum_k a_k p^{(k)}, exact.
Poly apply(const DiffOperator& op, const Poly& p);

enum class DegeneracyPolicy {
  kError,
  // Free coordinates are set to zero and reported; inconsistent equations
  // still raise DegenerateSpectrum.
  kZeroFreeCoordinates,
};

struct EigenSolution {
  Poly polynomial;
  Rat eigenvalue;
  std::vector<std::size_t> free_indices;
};

// Monic degree-n eigenpolynomial by back-substitution in the monomial basis.
// Admissibility makes the operator triangular there: the x^j coefficient of
// op(x^i) vanishes for j > i and equals lambda_i for j == i, so
//   (lambda_n - lambda_j) b_j = sum_{i > j} [x^j] op(x^i) * b_i.
// Throws NotAdmissible, DegenerateSpectrum.
EigenSolution solve_eigenpolynomial(const DiffOperator& op, std::size_t n,
                                    DegeneracyPolicy policy = DegeneracyPolicy::kError);

inline Poly eigenpolynomial(const DiffOperator& op, std::size_t n) {
  return solve_eigenpolynomial(op, n).polynomial;
}

// {"terms":[{"k":2,"coeffs":[...]}, ...]}; keys k distinct and >= 1, unknown
// fields rejected. Throws ParseError.
DiffOperator operator_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DiffOperator& op);
nlohmann::json to_json(const AdmissibilityReport& report);

}  // namespace bk
