#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bk/diff_operator.hpp"
#include "bk/poly.hpp"
#include "bk/rational.hpp"

namespace bk {

// Named classical orthogonal polynomial family.
struct Family {
  enum class Kind { kJacobi, kLegendre, kChebyshev1, kChebyshev2, kHermite, kLaguerre };

  Kind kind = Kind::kLegendre;
  Rat alpha = 0;  // Jacobi, Laguerre
  Rat beta = 0;   // Jacobi

  static Family jacobi(Rat alpha, Rat beta);
  static Family legendre() { return Family{Kind::kLegendre, 0, 0}; }
  static Family chebyshev1() { return Family{Kind::kChebyshev1, 0, 0}; }
  static Family chebyshev2() { return Family{Kind::kChebyshev2, 0, 0}; }
  static Family hermite() { return Family{Kind::kHermite, 0, 0}; }
  static Family laguerre(Rat alpha);

  // "hermite", "legendre", "chebyshev1", "chebyshev2", "laguerre:alpha=1",
  // "jacobi:alpha=1/2,beta=-1/2"; a leading "family=" is accepted. Throws
  // ParseError or BadParameters.
  static Family parse(const std::string& text);
  std::string to_string() const;

  // Orthogonality on a compact interval (Jacobi and its special cases).
  bool compact() const { return kind != Kind::kHermite && kind != Kind::kLaguerre; }
  // [-1, 1] for the compact families, nullopt otherwise.
  std::optional<std::pair<Rat, Rat>> interval() const;

  bool operator==(const Family&) const = default;
};

// Monic three-term recurrence p_{n+1} = (x - A_n) p_n - B_n p_{n-1}.
struct RecurrenceCoefficients {
  Rat a;
  Rat b;  // B_0 is unused and stored as 0
};

RecurrenceCoefficients recurrence(const Family& f, std::size_t n);

// p_0 .. p_max, built once from the recurrence.
class RecurrenceOps {
 public:
  RecurrenceOps(const Family& f, std::size_t max_degree);
  const Poly& operator[](std::size_t n) const { return polys_.at(n); }
  std::size_t max_degree() const { return polys_.size() - 1; }

 private:
  std::vector<Poly> polys_;
};

Poly classical_monic(const Family& f, std::size_t n);

// Linear functional given by its moments m_k = sigma(x^k).
class MomentFunctional {
 public:
  explicit MomentFunctional(std::vector<Rat> moments);
  const std::vector<Rat>& moments() const { return moments_; }
  std::size_t size() const { return moments_.size(); }
  // sigma(p); throws InsufficientMoments when deg p exceeds what is known.
  Rat operator()(const Poly& p) const;

 private:
  std::vector<Rat> moments_;
};

// {"moments": ["2", "0", "2/3", ...]}
MomentFunctional moments_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MomentFunctional& m);

Rat inner_product(const MomentFunctional& sigma, const Poly& p, const Poly& q);

// det [m_{i+j}]_{i,j<k}; det of the empty matrix is 1.
Rat hankel_determinant(const MomentFunctional& sigma, std::size_t k);

// Monic p_0 .. p_n orthogonal for sigma. Needs 2n + 1 moments
// (InsufficientMoments) and <p_k, p_k> > 0 for k <= n, raising
// NotPositiveDefinite at the first order where that fails.
std::vector<Poly> gram_schmidt_ops(const MomentFunctional& sigma, std::size_t n);

// Second-order operator with the family as eigenpolynomials.
DiffOperator bochner_operator(const Family& f);

// First `count` moments of the orthogonality weight scaled to total mass 1,
// which keeps them rational for every rational parameter: Jacobi through the
// Beta law of (1 + x) / 2, Laguerre as rising factorials (alpha + 1)_k,
// Hermite as (k - 1)!! for the standard normal.
MomentFunctional classical_moments(const Family& f, std::size_t count);

// Largest |sigma(p_i p_j)| over i != j <= n_max, where p_i are eigenpolynomials
// of op. Zero means op is orthogonal for sigma up to n_max.
Rat orthogonality_defect(const DiffOperator& op, const MomentFunctional& sigma,
                         std::size_t n_max);

}  // namespace bk
