#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bk/classical.hpp"
#include "bk/errors.hpp"
#include "bk/measures.hpp"
#include "support.hpp"

using namespace bk;

namespace {

constexpr Precision kPrec = 192;

Poly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

BigComplex real_atom(double x) { return BigComplex(BigFloat(x, kPrec), BigFloat(kPrec)); }

BigComplex real_atom(const BigFloat& x) { return BigComplex(x, BigFloat(x.precision())); }

// cos((2k - 1) pi / (2n)), k = 1..n
std::vector<BigComplex> chebyshev_nodes(std::size_t n) {
  std::vector<BigComplex> atoms;
  for (std::size_t k = 1; k <= n; ++k) {
    BigFloat t = BigFloat::pi(kPrec) * BigFloat(ratio(static_cast<long>(2 * k - 1), 2 * n), kPrec);
    BigFloat c(kPrec);
    mpfr_cos(c.get(), t.get(), MPFR_RNDN);
    atoms.push_back(real_atom(c));
  }
  return atoms;
}

// Simpson's rule for int_{-1}^{c} g(x) / (pi sqrt(1 - x^2)) dx after x = -1 + u^2,
// which leaves the smooth integrand 2 g(-1 + u^2) / (pi sqrt(2 - u^2)).
double arcsine_integral(double c, double (*g)(double)) {
  const double top = std::sqrt(1.0 + c);
  const int m = 20000;
  const double h = top / m;
  auto f = [&](double u) { return 2.0 * g(-1.0 + u * u) / (M_PI * std::sqrt(2.0 - u * u)); };
  double s = f(0) + f(top);
  for (int i = 1; i < m; ++i) s += f(i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

double one(double) { return 1.0; }
double square(double x) { return x * x; }

BigFloat tol(double v) { return BigFloat(v, 64); }

}  // namespace

TEST(RootMeasure, Atoms) {
  const RootMeasure pair({real_atom(1.0), real_atom(-1.0)});
  EXPECT_EQ(pair.size(), 2u);
  EXPECT_EQ(pair.weight(), ratio(1, 2));
  EXPECT_EQ(pair.atoms()[0].real().to_double(), -1.0);
  const RootMeasure single({real_atom(0.0)});
  EXPECT_EQ(single.weight(), Rat(1));
  const RootMeasure cubic =
      root_measure(realness(find_roots(P({0, -3, 0, 1}), 30), BigFloat(1L, 64)));
  EXPECT_EQ(cubic.size(), 3u);
  EXPECT_EQ(cubic.weight(), ratio(1, 3));
  EXPECT_TRUE(cubic.is_real());
  EXPECT_THROW(RootMeasure({}), std::invalid_argument);
}

TEST(RootMeasure, SortedByRealThenImaginary) {
  const RootMeasure m({BigComplex(Rat(0), Rat(1), 64), BigComplex(Rat(0), Rat(-1), 64),
                       BigComplex(Rat(-1), Rat(0), 64)});
  EXPECT_EQ(m.atoms()[0].real().to_double(), -1.0);
  EXPECT_EQ(m.atoms()[1].imag().to_double(), -1.0);
  EXPECT_EQ(m.atoms()[2].imag().to_double(), 1.0);
  EXPECT_FALSE(m.is_real());
}

TEST(ArcsineLaw, CdfExamples) {
  const ArcsineLaw law(-1, 1);
  EXPECT_LT(abs(law.cdf(BigFloat(kPrec)) - BigFloat(0.5, kPrec)), tol(1e-50));
  EXPECT_TRUE(law.cdf(BigFloat(-1L, kPrec)).is_zero());
  EXPECT_EQ(law.cdf(BigFloat(1L, kPrec)), BigFloat(1L, kPrec));
  EXPECT_TRUE(law.cdf(BigFloat(-7L, kPrec)).is_zero());
  EXPECT_EQ(law.cdf(BigFloat(3L, kPrec)), BigFloat(1L, kPrec));
  const BigFloat s = sqrt(BigFloat(2L, kPrec)) / BigFloat(2L, kPrec);
  EXPECT_LT(abs(law.cdf(s) - BigFloat(0.75, kPrec)), tol(1e-50));
  const ArcsineLaw shifted(2, 5);
  EXPECT_TRUE(shifted.cdf(BigFloat(2L, kPrec)).is_zero());
  EXPECT_EQ(shifted.cdf(BigFloat(5L, kPrec)), BigFloat(1L, kPrec));
  EXPECT_THROW(ArcsineLaw(1, 1), std::invalid_argument);
}

TEST(ArcsineLaw, CdfMatchesQuadrature) {
  const ArcsineLaw law(-1, 1);
  for (double c : {-0.9, -0.5, 0.0, 0.3, std::sqrt(0.5), 0.95}) {
    EXPECT_NEAR(law.cdf(BigFloat(c, kPrec)).to_double(), arcsine_integral(c, one), 1e-9) << c;
  }
}

TEST(ArcsineLaw, QuantileInvertsCdf) {
  const ArcsineLaw law(ratio(-1, 2), 3);
  for (int k = 0; k <= 10; ++k) {
    const BigFloat u(ratio(k, 10), kPrec);
    EXPECT_LT(abs(law.cdf(law.quantile(u)) - u), tol(1e-45)) << k;
  }
  EXPECT_THROW(law.quantile(BigFloat(1.5, 64)), std::invalid_argument);
}

TEST(KsDistance, SingleAtomAtMidpoint) {
  EXPECT_LT(abs(ks_distance(RootMeasure({real_atom(0.0)}), ArcsineLaw(-1, 1)) - BigFloat(0.5, kPrec)),
            tol(1e-50));
  EXPECT_LT(abs(ks_distance(RootMeasure({real_atom(3.5)}), ArcsineLaw(2, 5)) - BigFloat(0.5, kPrec)),
            tol(1e-50));
}

TEST(KsDistance, ChebyshevNodes) {
  const BigFloat ks = ks_distance(RootMeasure(chebyshev_nodes(20)), ArcsineLaw(-1, 1));
  EXPECT_LT(abs(ks - BigFloat(ratio(1, 40), kPrec)), tol(1e-50));
}

TEST(KsDistance, ArcsineQuantiles) {
  const ArcsineLaw law(-1, 1);
  std::vector<BigComplex> atoms;
  for (int k = 1; k <= 10; ++k) atoms.push_back(real_atom(law.quantile(BigFloat(ratio(k, 11), kPrec))));
  const BigFloat ks = ks_distance(RootMeasure(atoms), law);
  EXPECT_LT(abs(ks - BigFloat(ratio(1, 11), kPrec)), tol(1e-45));
}

TEST(KsDistance, TiedAtomsCountAsOneJump) {
  // Two atoms at 0: the empirical CDF jumps 0 -> 1 where F = 1/2.
  const BigFloat ks = ks_distance(RootMeasure({real_atom(0.0), real_atom(0.0)}), ArcsineLaw(-1, 1));
  EXPECT_LT(abs(ks - BigFloat(0.5, kPrec)), tol(1e-50));
}

TEST(KsDistance, RejectsComplexAtoms) {
  const RootMeasure m({BigComplex(Rat(0), Rat(1), 64), BigComplex(Rat(0), Rat(-1), 64)});
  EXPECT_THROW(ks_distance(m, ArcsineLaw(-1, 1)), NonRealAtoms);
  EXPECT_THROW(ks_distance(m, m), NonRealAtoms);
}

TEST(KsDistance, TwoSample) {
  const RootMeasure a({real_atom(0.0), real_atom(1.0)});
  const RootMeasure b({real_atom(0.5)});
  EXPECT_EQ(ks_distance(a, a), BigFloat(0L, 64));
  EXPECT_EQ(ks_distance(a, b), BigFloat(0.5, 64));
  const RootMeasure c({real_atom(2.0), real_atom(3.0), real_atom(4.0)});
  EXPECT_EQ(ks_distance(a, c), BigFloat(1L, 64));
  const RootMeasure d({real_atom(0.0), real_atom(1.0), real_atom(1.0), real_atom(5.0)});
  // F_a jumps to 1/2 then 1; F_d to 1/4, 3/4, 1.
  EXPECT_EQ(ks_distance(a, d), BigFloat(0.25, 64));
}

TEST(KsProperty, RelabelingAndPositivity) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BigComplex> atoms;
    for (int i = 0; i < 15; ++i) atoms.push_back(real_atom(u(rng)));
    const BigFloat ks = ks_distance(RootMeasure(atoms), ArcsineLaw(-1, 1));
    std::shuffle(atoms.begin(), atoms.end(), rng);
    EXPECT_EQ(ks, ks_distance(RootMeasure(atoms), ArcsineLaw(-1, 1)));
    EXPECT_GT(ks.sign(), 0);
  }
}

TEST(KsProperty, AffineEquivariance) {
  const RootSet rs = realness(find_roots(classical_monic(Family::legendre(), 40), 30), BigFloat(1L, 64));
  const RootMeasure m = root_measure(rs);
  const Rat a = ratio(3, 2), b = 7;
  std::vector<BigComplex> mapped;
  for (const auto& z : m.atoms()) {
    // x in [-1, 1] to [a, b]: the inverse of x -> (2x - (a + b)) / (b - a).
    const BigFloat x = (z.real() * BigFloat(b - a, kPrec) + BigFloat(a + b, kPrec)) / BigFloat(2L, kPrec);
    mapped.push_back(real_atom(x));
  }
  const BigFloat ks1 = ks_distance(m, ArcsineLaw(-1, 1));
  const BigFloat ks2 = ks_distance(RootMeasure(mapped), ArcsineLaw(a, b));
  EXPECT_LT(abs(ks1 - ks2), tol(1e-25));
}

TEST(Moment, Examples) {
  const RootMeasure pair({real_atom(1.0), real_atom(-1.0)});
  EXPECT_EQ(moment(pair, 0).real().to_double(), 1.0);
  EXPECT_TRUE(moment(pair, 1).real().is_zero());
  EXPECT_EQ(moment(RootMeasure({real_atom(0.3)}), 0).real().to_double(), 1.0);
  // Even integrand; the substitution is only smooth away from x = 1.
  const double oracle = 2.0 * arcsine_integral(0.0, square);
  EXPECT_NEAR(oracle, 0.5, 1e-5);
  EXPECT_NEAR(moment(RootMeasure(chebyshev_nodes(50)), 2).real().to_double(), oracle, 0.02);
}

TEST(Rescale, Examples) {
  const RootMeasure m({real_atom(-2.0), real_atom(2.0)});
  const RootMeasure same = rescale(m, BigFloat(1L, 64));
  EXPECT_EQ(same.atoms()[0].real(), m.atoms()[0].real());
  const RootMeasure half = rescale(m, BigFloat(2L, 64));
  EXPECT_EQ(half.atoms()[0].real().to_double(), -1.0);
  EXPECT_EQ(half.atoms()[1].real().to_double(), 1.0);
  EXPECT_TRUE(half.is_real());
  EXPECT_THROW(rescale(m, BigFloat(0L, 64)), std::invalid_argument);

  const RootSet rs = find_roots(classical_monic(Family::hermite(), 100), 30);
  const RootMeasure h = rescale(root_measure(rs), max_radius(rs));
  for (const auto& z : h.atoms()) EXPECT_LE(abs(z), BigFloat(1L, 64) + tol(1e-25));
}

TEST(Cauchy, Examples) {
  const BigComplex two(Rat(2), Rat(0), 256);
  EXPECT_LT(abs(empirical_cauchy(P({0, 0, 1}), 2, two) - BigComplex(Rat(1, 2), Rat(0), 256)), tol(1e-60));
  EXPECT_LT(abs(empirical_cauchy(P({-1, 0, 1}), 2, two) - BigComplex(Rat(2, 3), Rat(0), 256)), tol(1e-60));
  const Poly legendre2({Rat(-1, 3), Rat(0), Rat(1)});
  EXPECT_LT(abs(empirical_cauchy(legendre2, 2, two) - BigComplex(Rat(6, 11), Rat(0), 256)), tol(1e-60));
}

TEST(Cauchy, TooCloseToRoot) {
  EXPECT_THROW(cauchy_probe(P({-1, 0, 1}), 2, BigComplex(Rat(1), Rat(0), 128)), ProbeTooCloseToRoot);
  const BigComplex near(Rat(1) + Rat(1) / Rat(BigInt("1000000000000")), Rat(0), 128);
  EXPECT_THROW(cauchy_probe(P({-1, 0, 1}), 2, near), ProbeTooCloseToRoot);
  ProbeOptions loose;
  loose.min_distance = BigFloat(1e-15, 64);
  const CauchyProbe probe = cauchy_probe(P({-1, 0, 1}), 2, near, loose);
  EXPECT_GT(probe.root_distance, tol(1e-15));
  EXPECT_LE(probe.root_distance, tol(1.0001e-12));
}

TEST(Cauchy, DistanceBoundIsALowerBound) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Poly p = classical_monic(Family::legendre(), 5 + 3 * trial);
    const RootSet rs = find_roots(p, 30);
    const BigComplex x(BigFloat(u(rng), 128), BigFloat(u(rng) / 4, 128));
    ProbeOptions po;
    po.min_distance = BigFloat(0L, 64);
    const CauchyProbe probe = cauchy_probe(p, *p.degree(), x, po);
    BigFloat nearest = BigFloat::infinity(64);
    for (const auto& z : rs.roots) nearest = min(nearest, BigFloat(abs(z - x), 64));
    EXPECT_LE(probe.root_distance, nearest);
  }
}

TEST(Cauchy, PartialFractions) {
  const Poly p = classical_monic(Family::legendre(), 30);
  const RootSet rs = find_roots(p, 40);
  for (const BigComplex& x : {BigComplex(Rat(2), Rat(0), 256), BigComplex(Rat(1), Rat(1), 256),
                              BigComplex(Rat(-1, 3), Rat(1, 10), 256)}) {
    BigComplex sum(256);
    for (const auto& z : rs.roots) sum += BigComplex(Rat(1), Rat(0), 256) / (x - z);
    sum = scale(sum, BigFloat(ratio(1, 30), 256));
    EXPECT_LT(abs(empirical_cauchy(p, 30, x) - sum), tol(1e-30));
  }
}

TEST(CauchyResidual, Examples) {
  const DiffOperator legendre = bochner_operator(Family::legendre());
  const BigComplex two(Rat(2), Rat(0), 256);
  EXPECT_LT(abs(cauchy_residual(legendre, 2, two) - BigFloat(ratio(13, 121), 256)), tol(1e-60));
  const BigComplex far(Rat(1000000), Rat(0), 256);
  EXPECT_LT(cauchy_residual(legendre, 2, far), tol(1e-9));
  const DiffOperator order4 = operator_from_json(gen::load_json("operators/legendre_type.json"));
  EXPECT_LT(cauchy_residual(order4, 6, far), tol(1e-9));
  EXPECT_LT(cauchy_residual(legendre, 100, two), tol(0.01));
}

TEST(CauchyResidual, Preconditions) {
  const BigComplex two(Rat(2), Rat(0), 256);
  EXPECT_THROW(cauchy_residual(bochner_operator(Family::hermite()), 5, two), LeadingDegreeTooLow);
  const DiffOperator degenerate({P({0, -3}), P({0, 0, 1})});
  EXPECT_THROW(cauchy_residual(degenerate, 3, two), DegenerateSpectrum);
  const DiffOperator inadmissible({P({0, -1}), P({0, 0, 0, 1})});
  EXPECT_THROW(cauchy_residual(inadmissible, 3, two), NotAdmissible);
  const DiffOperator bad({P({0, 0, 1}), P({0, 0, 1})});
  EXPECT_THROW(cauchy_residual(bad, 3, two), NotAdmissible);
}

TEST(GrowthExponent, Examples) {
  std::vector<std::pair<std::size_t, BigFloat>> flat, root;
  for (std::size_t n : {10, 20, 40, 80, 160}) {
    flat.emplace_back(n, BigFloat(1L, 64));
    root.emplace_back(n, sqrt(BigFloat(static_cast<long>(n), 128)));
  }
  EXPECT_TRUE(growth_exponent(flat).is_zero());
  EXPECT_LT(abs(growth_exponent(root) - BigFloat(0.5, 128)), tol(1e-9));
  flat.pop_back();
  EXPECT_THROW(growth_exponent(flat), std::invalid_argument);
  root[2].first = 20;
  EXPECT_THROW(growth_exponent(root), std::invalid_argument);
}

TEST(Convergence, LegendreKsShrinks) {
  const ArcsineLaw law(-1, 1);
  auto ks_at = [&](std::size_t n) {
    const RootSet rs = find_roots(classical_monic(Family::legendre(), n), 30);
    return ks_distance(root_measure(realness(rs, BigFloat(1L, 64))), law);
  };
  EXPECT_LT(ks_at(100), ks_at(25));
}
