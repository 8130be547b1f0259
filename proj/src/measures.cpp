#include "bk/measures.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bk/errors.hpp"

namespace bk {

RootMeasure::RootMeasure(std::vector<BigComplex> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("root measure needs at least one atom");
  std::stable_sort(atoms_.begin(), atoms_.end(), [](const BigComplex& x, const BigComplex& y) {
    if (x.real() < y.real()) return true;
    if (y.real() < x.real()) return false;
    return x.imag() < y.imag();
  });
}

bool RootMeasure::is_real() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const BigComplex& z) { return z.is_real(); });
}

RootMeasure root_measure(const RootSet& rs) { return RootMeasure(rs.roots); }

ArcsineLaw::ArcsineLaw(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
  if (!(a_ < b_)) throw std::invalid_argument("arcsine law needs a < b");
}

BigFloat ArcsineLaw::cdf(const BigFloat& x) const {
  const Precision prec = x.precision();
  const BigFloat a(a_, prec), b(b_, prec);
  if (x <= a) return BigFloat(prec);
  if (x >= b) return BigFloat(1L, prec);
  const BigFloat t = sqrt((x - a) / (b - a));
  BigFloat f = BigFloat(2L, prec) * asin(t) / BigFloat::pi(prec);
  return min(max(f, BigFloat(prec)), BigFloat(1L, prec));
}

BigFloat ArcsineLaw::density(const BigFloat& x) const {
  const Precision prec = x.precision();
  const BigFloat a(a_, prec), b(b_, prec);
  if (x <= a || x >= b) return BigFloat(prec);
  return BigFloat(1L, prec) / (BigFloat::pi(prec) * sqrt((b - x) * (x - a)));
}

BigFloat ArcsineLaw::quantile(const BigFloat& u) const {
  const Precision prec = u.precision();
  if (u.sign() < 0 || u > BigFloat(1L, prec)) {
    throw std::invalid_argument("quantile needs u in [0, 1]");
  }
  BigFloat s(prec);
  const BigFloat angle = BigFloat::pi(prec) * u / BigFloat(2L, prec);
  mpfr_sin(s.get(), angle.get(), MPFR_RNDN);
  return BigFloat(a_, prec) + BigFloat(b_ - a_, prec) * s * s;
}

namespace {

void require_real(const RootMeasure& m) {
  if (!m.is_real()) {
    throw NonRealAtoms("KS distance needs real atoms; flag them with realness() first");
  }
}

}  // namespace

BigFloat ks_distance(const RootMeasure& m, const ArcsineLaw& law) {
  require_real(m);
  const auto& atoms = m.atoms();
  const std::size_t n = atoms.size();
  const Precision prec = atoms.front().precision();
  BigFloat sup(prec);
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s + 1;
    while (e < n && atoms[e].real() == atoms[s].real()) ++e;
    const BigFloat f = law.cdf(atoms[s].real());
    const BigFloat before(ratio(static_cast<long>(s), n), prec);
    const BigFloat after(ratio(static_cast<long>(e), n), prec);
    sup = max(sup, max(abs(after - f), abs(f - before)));
    s = e;
  }
  return sup;
}

BigFloat ks_distance(const RootMeasure& m1, const RootMeasure& m2) {
  require_real(m1);
  require_real(m2);
  const auto& x = m1.atoms();
  const auto& y = m2.atoms();
  const auto n1 = static_cast<unsigned long>(x.size());
  const auto n2 = static_cast<unsigned long>(y.size());
  std::size_t i = 0, j = 0;
  Rat sup = 0;
  while (i < x.size() || j < y.size()) {
    // Next jump location, then consume every atom equal to it in both.
    const BigFloat* v;
    if (j == y.size() || (i < x.size() && x[i].real() <= y[j].real())) {
      v = &x[i].real();
    } else {
      v = &y[j].real();
    }
    const BigFloat at = *v;
    while (i < x.size() && x[i].real() == at) ++i;
    while (j < y.size() && y[j].real() == at) ++j;
    const Rat gap = abs(ratio(static_cast<long>(i), n1) - ratio(static_cast<long>(j), n2));
    if (gap > sup) sup = gap;
  }
  return BigFloat(sup, std::max(x.front().precision(), y.front().precision()));
}

BigComplex moment(const RootMeasure& m, unsigned k) {
  const Precision prec = m.atoms().front().precision();
  BigComplex sum(prec);
  for (const auto& z : m.atoms()) sum += pow(z, k);
  const BigFloat inv(ratio(1, m.size()), prec);
  return scale(sum, inv);
}

RootMeasure rescale(const RootMeasure& m, const BigFloat& s) {
  if (!(s.sign() > 0)) throw std::invalid_argument("rescale needs s > 0");
  const BigFloat inv = BigFloat(1L, s.precision()) / s;
  std::vector<BigComplex> atoms;
  atoms.reserve(m.size());
  for (const auto& z : m.atoms()) {
    BigComplex w = scale(z, inv);
    // Keep real atoms exactly real.
    if (z.is_real()) mpfr_set_zero(w.imag().get(), 1);
    atoms.push_back(std::move(w));
  }
  return RootMeasure(std::move(atoms));
}

namespace {

struct Taylor {
  std::vector<BigComplex> coeffs;  // p(x + y) = sum coeffs[k] y^k
  BigFloat noise;                  // bound on the rounding error in coeffs[0]
};

Taylor taylor_at(const Poly& p, const BigComplex& x, Precision prec) {
  const std::size_t n = *p.degree();
  Taylor t{std::vector<BigComplex>(), BigFloat(64)};
  t.coeffs.reserve(n + 1);
  for (const auto& c : p.coeffs()) t.coeffs.emplace_back(c, Rat(0), prec);
  const BigComplex xw(x, prec);
  // Repeated synthetic division by (y - x).
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = n; i-- > k;) {
      t.coeffs[i] += t.coeffs[i + 1] * xw;
    }
  }
  BigFloat bound(64), ax(64);
  mpfr_hypot(ax.get(), x.real().get(), x.imag().get(), MPFR_RNDU);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    BigFloat c(64);
    mpfr_set_q(c.get(), p.coeffs()[i].get_mpq_t(), MPFR_RNDU);
    mpfr_abs(c.get(), c.get(), MPFR_RNDU);
    mpfr_mul(bound.get(), bound.get(), ax.get(), MPFR_RNDU);
    mpfr_add(bound.get(), bound.get(), c.get(), MPFR_RNDU);
  }
  mpfr_mul_ui(bound.get(), bound.get(), 4 * (n + 1), MPFR_RNDU);
  mpfr_mul_2si(bound.get(), bound.get(), 1 - prec, MPFR_RNDU);
  t.noise = bound;
  return t;
}

// 1 / (2 max_k |c_k / c_0|^(1/k)), last term halved: Fujiwara's bound for
// the reversed polynomial, inverted.
BigFloat root_distance_bound(const std::vector<BigComplex>& c) {
  const std::size_t n = c.size() - 1;
  const BigFloat c0 = abs(c[0]);
  BigFloat worst(64);
  for (std::size_t k = 1; k <= n; ++k) {
    BigFloat ck(abs(c[k]), 64);
    if (ck.is_zero()) continue;
    if (k == n) ck /= BigFloat(2L, 64);
    BigFloat ratio(ck / BigFloat(c0, 64), 64);
    ratio = exp(log(ratio) / BigFloat(static_cast<long>(k), 64));
    worst = max(worst, ratio);
  }
  if (worst.is_zero()) return BigFloat::infinity(64);
  BigFloat d = BigFloat(1L, 64) / (BigFloat(2L, 64) * worst);
  // Slack for rounding in the Taylor coefficients.
  return d * BigFloat(0.999, 64);
}

}  // namespace

CauchyProbe cauchy_probe(const Poly& p, std::size_t n, const BigComplex& x,
                         const ProbeOptions& options) {
  if (p.is_zero() || *p.degree() < 1) throw std::invalid_argument("probe needs degree >= 1");
  if (n == 0) throw std::invalid_argument("probe needs n >= 1");
  const Precision base =
      options.precision + 64 + 2 * static_cast<Precision>(std::bit_width(p.coeffs().size()));
  // Escalate until p(x) clears its rounding noise; a value stuck in the noise
  // means x sits on (or numerically on) a root.
  for (Precision prec = base; prec <= 16 * base; prec *= 2) {
    Taylor t = taylor_at(p, x, prec);
    const BigFloat c0 = abs(t.coeffs[0]);
    if (!(BigFloat(c0, 64) > t.noise * BigFloat(1024L, 64))) continue;
    CauchyProbe probe{x, BigComplex(options.precision), root_distance_bound(t.coeffs)};
    if (probe.root_distance < options.min_distance) {
      throw ProbeTooCloseToRoot("probe point within " + probe.root_distance.to_string(6) +
                                " of a root");
    }
    const BigComplex nc0 = scale(t.coeffs[0], BigFloat(static_cast<long>(n), prec));
    probe.value = BigComplex(t.coeffs[1] / nc0, options.precision);
    return probe;
  }
  throw ProbeTooCloseToRoot("polynomial vanishes at the probe point to working precision");
}

BigFloat cauchy_residual(const DiffOperator& op, const Poly& p_n, const BigComplex& x,
                         const ProbeOptions& options) {
  const unsigned order = op.order();
  if (!validate(op).admissible) throw NotAdmissible("operator is not admissible");
  if (op.leading().degree() != order) {
    throw LeadingDegreeTooLow("deg a_N < N: the residual identity needs deg a_N == N");
  }
  const CauchyProbe probe = cauchy_probe(p_n, *p_n.degree(), x, options);
  const BigComplex a = evaluate(op.leading().monic(), x, options.precision);
  BigComplex r = pow(probe.value, order) * a;
  r.real() -= BigFloat(1L, options.precision);
  return abs(r);
}

BigFloat cauchy_residual(const DiffOperator& op, std::size_t n, const BigComplex& x,
                         const ProbeOptions& options) {
  if (n == 0) throw std::invalid_argument("residual needs n >= 1");
  if (!validate(op).admissible) throw NotAdmissible("operator is not admissible");
  if (op.leading().degree() != op.order()) {
    throw LeadingDegreeTooLow("deg a_N < N: the residual identity needs deg a_N == N");
  }
  return cauchy_residual(op, eigenpolynomial(op, n), x, options);
}

BigFloat growth_exponent(const std::vector<std::pair<std::size_t, BigFloat>>& series) {
  if (series.size() < 5) throw std::invalid_argument("growth exponent needs >= 5 points");
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].first == 0) throw std::invalid_argument("n must be positive");
    if (i > 0 && series[i].first <= series[i - 1].first) {
      throw std::invalid_argument("n must be strictly increasing");
    }
    if (!(series[i].second.sign() > 0)) throw std::invalid_argument("radii must be positive");
  }
  constexpr Precision prec = 128;
  const bool flat = std::all_of(series.begin(), series.end(),
                                [&](const auto& s) { return s.second == series.front().second; });
  if (flat) return BigFloat(prec);

  const BigFloat count(static_cast<long>(series.size()), prec);
  BigFloat sx(prec), sy(prec), sxx(prec), sxy(prec);
  for (const auto& [n, r] : series) {
    const BigFloat lx = log(BigFloat(static_cast<long>(n), prec));
    const BigFloat ly = log(BigFloat(r, prec));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace bk
