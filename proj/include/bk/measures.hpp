#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bk/bigfloat.hpp"
#include "bk/diff_operator.hpp"
#include "bk/poly.hpp"
#include "bk/roots.hpp"

namespace bk {

// Normalized counting measure: mass 1/n on each atom. Atoms are kept sorted
// by real part, ties broken by imaginary part.
class RootMeasure {
 public:
  explicit RootMeasure(std::vector<BigComplex> atoms);

  const std::vector<BigComplex>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  Rat weight() const { return ratio(1, atoms_.size()); }
  bool is_real() const;

 private:
  std::vector<BigComplex> atoms_;
};

RootMeasure root_measure(const RootSet& rs);

// Arcsine law on [a, b]: density 1 / (pi sqrt((b - x)(x - a))).
class ArcsineLaw {
 public:
  // Throws std::invalid_argument unless a < b.
  ArcsineLaw(Rat a, Rat b);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  // (2/pi) asin(sqrt((x - a)/(b - a))), clamped to [0, 1] outside [a, b].
  BigFloat cdf(const BigFloat& x) const;
  // Zero outside the open interval.
  BigFloat density(const BigFloat& x) const;
  // Inverse CDF for u in [0, 1].
  BigFloat quantile(const BigFloat& u) const;

 private:
  Rat a_;
  Rat b_;
};

inline BigFloat arcsine_cdf(const ArcsineLaw& law, const BigFloat& x) { return law.cdf(x); }

// Exact KS statistic between the empirical CDF of real atoms and the law:
// sup over atoms of the gaps on both sides of each jump. Throws NonRealAtoms
// when some atom has a nonzero imaginary part.
BigFloat ks_distance(const RootMeasure& m, const ArcsineLaw& law);

// sup |F_m1 - F_m2| between two empirical CDFs of real atoms.
BigFloat ks_distance(const RootMeasure& m1, const RootMeasure& m2);

// (1/n) sum atom^k.
BigComplex moment(const RootMeasure& m, unsigned k);

// Atoms divided by s > 0.
RootMeasure rescale(const RootMeasure& m, const BigFloat& s);

struct CauchyProbe {
  BigComplex point;
  BigComplex value;
  // Certified lower bound on the distance from the point to every root.
  BigFloat root_distance;
};

struct ProbeOptions {
  Precision precision = 256;
  // Probes closer than this to a root raise ProbeTooCloseToRoot.
  BigFloat min_distance{1e-9, 64};
};

// The Cauchy transform of the root measure of p, p'(x) / (n p(x)). The
// distance guard comes from the Taylor expansion of p at x: every root y - x
// of p(x + y) satisfies |y| >= 1 / (2 max_k |c_k / c_0|^(1/k)).
CauchyProbe cauchy_probe(const Poly& p, std::size_t n, const BigComplex& x,
                         const ProbeOptions& options = {});

inline BigComplex empirical_cauchy(const Poly& p, std::size_t n, const BigComplex& x,
                                   const ProbeOptions& options = {}) {
  return cauchy_probe(p, n, x, options).value;
}

// |C_n(x)^N * a~_N(x) - 1| where a~_N is a_N made monic and C_n is the
// Cauchy transform of the root measure of p_n. Throws LeadingDegreeTooLow
// when deg a_N < N and NotAdmissible first, plus whatever eigenpolynomial
// and cauchy_probe raise.
BigFloat cauchy_residual(const DiffOperator& op, std::size_t n, const BigComplex& x,
                         const ProbeOptions& options = {});
// Same, with p_n already computed.
BigFloat cauchy_residual(const DiffOperator& op, const Poly& p_n, const BigComplex& x,
                         const ProbeOptions& options = {});

// Least-squares slope of log(radius) against log(n). Needs at least five
// points with n strictly increasing and every radius positive
// (std::invalid_argument otherwise). Returns exactly 0 when every radius is
// equal.
BigFloat growth_exponent(const std::vector<std::pair<std::size_t, BigFloat>>& series);

}  // namespace bk
