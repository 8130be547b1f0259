#include <gtest/gtest.h>

#include <random>

#include "bk/classical.hpp"
#include "bk/errors.hpp"
#include "bk/roots.hpp"
#include "support.hpp"

using namespace bk;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

const Poly kX = P({0, 1});

// binom(a, j) for rational a.
Rat gbinom(const Rat& a, std::size_t j) {
  Rat r = 1;
  for (std::size_t i = 0; i < j; ++i) r = r * (a - Rat(static_cast<long>(i))) / Rat(static_cast<long>(i + 1));
  return r;
}

Poly power(const Poly& p, std::size_t k) {
  Poly r = P({1});
  for (std::size_t i = 0; i < k; ++i) r = r * p;
  return r;
}

// Explicit sums, normalized to leading coefficient 1. Nothing here goes
// through the recurrence or the operator.
Poly jacobi_explicit(const Rat& a, const Rat& b, std::size_t n) {
  const Poly xm = Poly({Rat(-1, 2), Rat(1, 2)});  // (x - 1) / 2
  const Poly xp = Poly({Rat(1, 2), Rat(1, 2)});   // (x + 1) / 2
  Poly s;
  const Rat nn(static_cast<long>(n));
  for (std::size_t k = 0; k <= n; ++k) {
    s = s + (gbinom(nn + a, n - k) * gbinom(nn + b, k)) * (power(xm, k) * power(xp, n - k));
  }
  return s.monic();
}

Poly laguerre_explicit(const Rat& a, std::size_t n) {
  std::vector<Rat> c(n + 1);
  Rat fact = 1;
  const Rat nn(static_cast<long>(n));
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) fact *= Rat(static_cast<long>(k));
    c[k] = gbinom(nn + a, n - k) / fact * Rat(k % 2 ? -1 : 1);
  }
  return Poly(std::move(c)).monic();
}

Poly hermite_explicit(std::size_t n) {
  // He_n = sum_m (-1)^m n! / (m! (n - 2m)! 2^m) x^(n - 2m)
  std::vector<Rat> c(n + 1);
  for (std::size_t m = 0; 2 * m <= n; ++m) {
    Rat t = gbinom(Rat(static_cast<long>(n)), 2 * m);
    for (std::size_t i = 1; i <= 2 * m; ++i) t *= Rat(static_cast<long>(i));
    Rat d = 1;
    for (std::size_t i = 1; i <= m; ++i) d *= Rat(static_cast<long>(2 * i));
    c[n - 2 * m] = t / d * Rat(m % 2 ? -1 : 1);
  }
  return Poly(std::move(c));
}

// T_{n+1} = 2x T_n - T_{n-1} with U_1 = 2x, then made monic.
Poly chebyshev_explicit(bool second_kind, std::size_t n) {
  Poly prev = P({1});
  Poly cur = second_kind ? P({0, 2}) : kX;
  if (n == 0) return prev;
  for (std::size_t k = 1; k < n; ++k) {
    Poly next = P({0, 2}) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur.monic();
}

Poly oracle(const Family& f, std::size_t n) {
  switch (f.kind) {
    case Family::Kind::kJacobi:
      return jacobi_explicit(f.alpha, f.beta, n);
    case Family::Kind::kLegendre:
      return jacobi_explicit(0, 0, n);
    case Family::Kind::kChebyshev1:
      return chebyshev_explicit(false, n);
    case Family::Kind::kChebyshev2:
      return chebyshev_explicit(true, n);
    case Family::Kind::kHermite:
      return hermite_explicit(n);
    case Family::Kind::kLaguerre:
      return laguerre_explicit(f.alpha, n);
  }
  return {};
}

std::vector<Family> battery() {
  std::vector<Family> out = {Family::legendre(),   Family::chebyshev1(),   Family::chebyshev2(),
                             Family::hermite(),    Family::laguerre(0),    Family::laguerre(1),
                             Family::laguerre(ratio(-1, 2)), Family::jacobi(1, 2),
                             Family::jacobi(ratio(-1, 3), ratio(5, 2))};
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) out.push_back(Family::jacobi(a, b));
  return out;
}

}  // namespace

TEST(Classical, Examples) {
  EXPECT_EQ(classical_monic(Family::hermite(), 1), kX);
  EXPECT_EQ(classical_monic(Family::legendre(), 2), Poly({Rat(-1, 3), Rat(0), Rat(1)}));
  EXPECT_EQ(classical_monic(Family::chebyshev1(), 2), Poly({Rat(-1, 2), Rat(0), Rat(1)}));
  EXPECT_EQ(classical_monic(Family::hermite(), 4), P({3, 0, -6, 0, 1}));
  EXPECT_EQ(classical_monic(Family::laguerre(0), 2), P({2, -4, 1}));
  EXPECT_EQ(classical_monic(Family::legendre(), 0), P({1}));
}

TEST(Classical, OracleSanity) {
  // The explicit forms against a few printed values.
  EXPECT_EQ(hermite_explicit(3), P({0, -3, 0, 1}));
  EXPECT_EQ(jacobi_explicit(0, 0, 3), Poly({Rat(0), Rat(-3, 5), Rat(0), Rat(1)}));
  EXPECT_EQ(chebyshev_explicit(false, 3), Poly({Rat(0), Rat(-3, 4), Rat(0), Rat(1)}));
  EXPECT_EQ(chebyshev_explicit(true, 2), Poly({Rat(-1, 4), Rat(0), Rat(1)}));
  EXPECT_EQ(jacobi_explicit(ratio(-1, 2), ratio(-1, 2), 4), chebyshev_explicit(false, 4));
}

TEST(Classical, RecurrenceMatchesExplicitSums) {
  for (const Family& f : battery()) {
    const RecurrenceOps ops(f, 25);
    for (std::size_t n = 0; n <= 25; ++n) ASSERT_EQ(ops[n], oracle(f, n)) << f.to_string() << " n=" << n;
  }
}

TEST(Classical, EigenpolynomialsOfBochnerOperator) {
  for (const Family& f : battery()) {
    const DiffOperator op = bochner_operator(f);
    EXPECT_TRUE(validate(op).admissible) << f.to_string();
    for (std::size_t n = 0; n <= 25; ++n) {
      ASSERT_EQ(eigenpolynomial(op, n), classical_monic(f, n)) << f.to_string() << " n=" << n;
    }
  }
}

TEST(Classical, BochnerOperatorCoefficients) {
  EXPECT_EQ(bochner_operator(Family::hermite()), DiffOperator({P({0, -1}), P({1})}));
  EXPECT_EQ(bochner_operator(Family::legendre()), DiffOperator({P({0, -2}), P({1, 0, -1})}));
  EXPECT_EQ(bochner_operator(Family::laguerre(1)), DiffOperator({P({2, -1}), P({0, 1})}));
  EXPECT_EQ(bochner_operator(Family::jacobi(1, 2)), DiffOperator({P({1, -5}), P({1, 0, -1})}));
}

TEST(Classical, BadParameters) {
  EXPECT_THROW(Family::jacobi(-1, 0), BadParameters);
  EXPECT_THROW(Family::jacobi(0, ratio(-3, 2)), BadParameters);
  EXPECT_THROW(Family::laguerre(-2), BadParameters);
  EXPECT_THROW(Family::parse("laguerre:alpha=-1"), BadParameters);
}

TEST(Classical, ParseAndFormat) {
  EXPECT_EQ(Family::parse("hermite"), Family::hermite());
  EXPECT_EQ(Family::parse("family=legendre"), Family::legendre());
  EXPECT_EQ(Family::parse("chebyshev-1"), Family::chebyshev1());
  EXPECT_EQ(Family::parse("jacobi:alpha=0.5,beta=-1/2"), Family::jacobi(ratio(1, 2), ratio(-1, 2)));
  EXPECT_EQ(Family::parse("laguerre"), Family::laguerre(0));
  for (const Family& f : battery()) EXPECT_EQ(Family::parse(f.to_string()), f) << f.to_string();
  EXPECT_EQ(Family::jacobi(1, 2).to_string(), "jacobi:alpha=1,beta=2");
  EXPECT_THROW(Family::parse("gegenbauer"), ParseError);
  EXPECT_THROW(Family::parse("jacobi:alpha=1,alpha=2"), ParseError);
  EXPECT_THROW(Family::parse("jacobi:gamma=1"), ParseError);
  EXPECT_THROW(Family::parse("hermite:alpha=1"), ParseError);
  EXPECT_THROW(Family::parse("jacobi:alpha=x"), ParseError);
  EXPECT_TRUE(Family::legendre().compact());
  EXPECT_FALSE(Family::hermite().interval().has_value());
  EXPECT_EQ(Family::chebyshev2().interval(), std::make_pair(Rat(-1), Rat(1)));
}

TEST(Moments, InnerProductExamples) {
  const MomentFunctional uniform = moments_from_json(gen::load_json("moments/uniform.json"));
  EXPECT_EQ(inner_product(uniform, kX, kX), Rat(2, 3));
  EXPECT_EQ(inner_product(uniform, kX, P({1})), Rat(0));
  EXPECT_EQ(inner_product(uniform, P({1}), P({1})), uniform.moments()[0]);
  EXPECT_THROW(inner_product(uniform, P({0, 0, 1}), P({0, 0, 0, 1})), InsufficientMoments);
}

TEST(Moments, GramSchmidtExamples) {
  const MomentFunctional uniform = moments_from_json(gen::load_json("moments/uniform.json"));
  const auto ps = gram_schmidt_ops(uniform, 2);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0], P({1}));
  EXPECT_EQ(ps[1], kX);
  EXPECT_EQ(ps[2], Poly({Rat(-1, 3), Rat(0), Rat(1)}));
  EXPECT_EQ(gram_schmidt_ops(uniform, 0), std::vector<Poly>{P({1})});
  EXPECT_THROW(gram_schmidt_ops(uniform, 3), InsufficientMoments);

  const MomentFunctional bad({Rat(1), Rat(2), Rat(1)});
  try {
    gram_schmidt_ops(bad, 1);
    FAIL() << "expected NotPositiveDefinite";
  } catch (const NotPositiveDefinite& e) {
    EXPECT_EQ(e.order(), 1u);
  }
  EXPECT_EQ(hankel_determinant(bad, 2), Rat(-3));
}

TEST(Moments, JsonRoundTrip) {
  const MomentFunctional m({Rat(1), Rat(0), Rat(1, 3)});
  EXPECT_EQ(moments_from_json(to_json(m)).moments(), m.moments());
  EXPECT_THROW(moments_from_json(nlohmann::json::parse(R"({"m":["1"]})")), ParseError);
  EXPECT_THROW(moments_from_json(nlohmann::json::parse(R"({"moments":[]})")), ParseError);
}

TEST(Moments, ClassicalMomentExamples) {
  // Uniform on [-1, 1] as a probability: 1, 0, 1/3, 0, 1/5.
  EXPECT_EQ(classical_moments(Family::legendre(), 5).moments(),
            (std::vector<Rat>{1, 0, ratio(1, 3), 0, ratio(1, 5)}));
  EXPECT_EQ(classical_moments(Family::hermite(), 7).moments(), (std::vector<Rat>{1, 0, 1, 0, 3, 0, 15}));
  EXPECT_EQ(classical_moments(Family::laguerre(0), 5).moments(), (std::vector<Rat>{1, 1, 2, 6, 24}));
  // Arcsine: E x^2 = 1/2, E x^4 = 3/8.
  EXPECT_EQ(classical_moments(Family::chebyshev1(), 5).moments(),
            (std::vector<Rat>{1, 0, ratio(1, 2), 0, ratio(3, 8)}));
}

TEST(ClassicalProperty, GramSchmidtOnWeightMomentsGivesFamily) {
  for (const Family& f : battery()) {
    const std::size_t n = 15;
    const auto ps = gram_schmidt_ops(classical_moments(f, 2 * n + 1), n);
    for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(ps[k], classical_monic(f, k)) << f.to_string() << " k=" << k;
  }
}

TEST(ClassicalProperty, ThreeTermRecurrenceNormRatio) {
  for (const Family& f : battery()) {
    const std::size_t n_max = 12;
    const MomentFunctional sigma = classical_moments(f, 2 * n_max + 3);
    const RecurrenceOps ops(f, n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto r = recurrence(f, n);
      EXPECT_EQ(ops[n + 1], (kX - Poly::constant(r.a)) * ops[n] - r.b * ops[n - 1]);
      const Rat ratio_of_norms =
          inner_product(sigma, ops[n], ops[n]) / inner_product(sigma, ops[n - 1], ops[n - 1]);
      EXPECT_EQ(r.b, ratio_of_norms) << f.to_string() << " n=" << n;
      EXPECT_GT(r.b, 0);
    }
  }
}

TEST(ClassicalProperty, HankelDeterminantsPositive) {
  for (const Family& f : battery()) {
    const MomentFunctional sigma = classical_moments(f, 21);
    for (std::size_t k = 0; k <= 11; ++k) EXPECT_GT(hankel_determinant(sigma, k), 0) << f.to_string();
  }
}

TEST(ClassicalProperty, CompactFamilyZerosInsideInterval) {
  for (const Family& f : battery()) {
    if (!f.compact()) continue;
    for (std::size_t n : {5, 20, 40}) {
      const RootSet rs = realness(find_roots(classical_monic(f, n), 20), BigFloat(1L, 64));
      for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        EXPECT_TRUE(rs.real_flags[i]);
        EXPECT_LT(abs(rs.roots[i].real()), BigFloat(1L, 64)) << f.to_string();
      }
    }
  }
}

TEST(ClassicalProperty, RandomSymmetricMomentsGramSchmidt) {
  // Moments of a random discrete probability measure with enough atoms are
  // positive definite; Gram-Schmidt must then produce sigma-orthogonal polys.
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> atoms;
    for (int i = 0; i < 8; ++i) atoms.push_back(gen::random_rat(rng) + Rat(i * 20));
    std::vector<Rat> m(15, 0);
    for (const Rat& a : atoms) {
      Rat p = 1;
      for (auto& v : m) {
        v += p;
        p *= a;
      }
    }
    const MomentFunctional sigma(m);
    const auto ps = gram_schmidt_ops(sigma, 7);
    for (std::size_t i = 0; i <= 7; ++i)
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(inner_product(sigma, ps[i], ps[j]), 0);
  }
}

TEST(Orthogonality, OrderFourOperatorWithMomentFile) {
  const DiffOperator op = operator_from_json(gen::load_json("operators/legendre_type.json"));
  const MomentFunctional sigma = moments_from_json(gen::load_json("moments/legendre_type.json"));
  EXPECT_EQ(orthogonality_defect(op, sigma, 20), 0);
  // The plain uniform measure is not the right functional for it.
  EXPECT_GT(orthogonality_defect(op, classical_moments(Family::legendre(), 41), 4), 0);
  EXPECT_THROW(orthogonality_defect(op, sigma, 21), InsufficientMoments);
}

TEST(Orthogonality, BochnerOperatorsAgainstClassicalMoments) {
  for (const Family& f : battery()) {
    EXPECT_EQ(orthogonality_defect(bochner_operator(f), classical_moments(f, 41), 20), 0) << f.to_string();
  }
}
