#include "bk/roots.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bk/errors.hpp"

namespace bk {

namespace {

constexpr double kAngleOffset = 0.4;
constexpr Precision kBoundPrecision = 64;

// Scratch registers for one precision level. Everything the inner loops touch
// lives here so the iteration does not allocate.
struct Workspace {
  explicit Workspace(Precision prec)
      : pr(prec), pi(prec), dr(prec), di(prec), t1(prec), t2(prec), t3(prec),
        nr(prec), ni(prec), sr(prec), si(prec), abs_z(kBoundPrecision),
        mu(kBoundPrecision), abs_p(kBoundPrecision) {}

  BigFloat pr, pi;  // q(z)
  BigFloat dr, di;  // q'(z)
  BigFloat t1, t2, t3;
  BigFloat nr, ni;  // Newton correction
  BigFloat sr, si;  // Aberth sum
  BigFloat abs_z, mu, abs_p;
};

struct Level {
  Level(const std::vector<Rat>& monic, Precision p) : prec(p) {
    coeff.reserve(monic.size());
    abs_coeff.reserve(monic.size());
    for (const auto& c : monic) {
      coeff.emplace_back(c, prec);
      BigFloat a(kBoundPrecision);
      mpfr_set_q(a.get(), c.get_mpq_t(), MPFR_RNDU);
      mpfr_abs(a.get(), a.get(), MPFR_RNDU);
      abs_coeff.push_back(std::move(a));
    }
  }

  std::size_t degree() const { return coeff.size() - 1; }

  Precision prec;
  std::vector<BigFloat> coeff;      // monic, rounded to nearest
  std::vector<BigFloat> abs_coeff;  // |c_k| rounded up
};

// Complex Horner for q(z) and optionally q'(z), plus a rounding-error bound
// mu >= |computed q(z) - q(z)| and |computed q(z)| in w.abs_p (rounded up).
void evaluate_at(const Level& L, const BigFloat& zr, const BigFloat& zi,
                 bool derivative, Workspace& w) {
  const std::size_t n = L.degree();
  mpfr_set_ui(w.pr.get(), 1, MPFR_RNDN);
  mpfr_set_zero(w.pi.get(), 1);
  mpfr_set_zero(w.dr.get(), 1);
  mpfr_set_zero(w.di.get(), 1);

  mpfr_hypot(w.abs_z.get(), zr.get(), zi.get(), MPFR_RNDU);
  mpfr_set_ui(w.mu.get(), 1, MPFR_RNDU);

  for (std::size_t k = n; k-- > 0;) {
    if (derivative) {
      mpfr_fmms(w.t1.get(), w.dr.get(), zr.get(), w.di.get(), zi.get(), MPFR_RNDN);
      mpfr_fmma(w.t2.get(), w.dr.get(), zi.get(), w.di.get(), zr.get(), MPFR_RNDN);
      mpfr_add(w.dr.get(), w.t1.get(), w.pr.get(), MPFR_RNDN);
      mpfr_add(w.di.get(), w.t2.get(), w.pi.get(), MPFR_RNDN);
    }
    mpfr_fmms(w.t1.get(), w.pr.get(), zr.get(), w.pi.get(), zi.get(), MPFR_RNDN);
    mpfr_fmma(w.pi.get(), w.pr.get(), zi.get(), w.pi.get(), zr.get(), MPFR_RNDN);
    mpfr_add(w.pr.get(), w.t1.get(), L.coeff[k].get(), MPFR_RNDN);

    mpfr_mul(w.mu.get(), w.mu.get(), w.abs_z.get(), MPFR_RNDU);
    mpfr_add(w.mu.get(), w.mu.get(), L.abs_coeff[k].get(), MPFR_RNDU);
  }
  // Complex Horner with rounded coefficients: |error| <= 4 (n + 1) u sum |c_k| |z|^k.
  mpfr_mul_ui(w.mu.get(), w.mu.get(), 4 * (n + 1), MPFR_RNDU);
  mpfr_mul_2si(w.mu.get(), w.mu.get(), 1 - L.prec, MPFR_RNDU);
  mpfr_hypot(w.abs_p.get(), w.pr.get(), w.pi.get(), MPFR_RNDU);
}

BigFloat fujiwara_bound(const std::vector<Rat>& monic) {
  const std::size_t n = monic.size() - 1;
  BigFloat best(kBoundPrecision);
  for (std::size_t k = 1; k <= n; ++k) {
    Rat c = monic[n - k];
    if (k == n) c /= 2;
    if (c == 0) continue;
    BigFloat v(abs(c), kBoundPrecision);
    v = exp(log(v) / BigFloat(static_cast<long>(k), kBoundPrecision));
    best = max(best, v);
  }
  best *= BigFloat(2L, kBoundPrecision);
  if (best.is_zero()) best = BigFloat(1L, kBoundPrecision);
  return best;
}

// One Gauss-Seidel sweep of the Aberth update over the active roots. Returns
// true while some correction is still above the working-precision floor.
bool aberth_sweep(const Level& L, std::vector<BigFloat>& re, std::vector<BigFloat>& im,
                  std::vector<bool>& frozen, Workspace& w) {
  const std::size_t n = L.degree();
  bool progress = false;
  BigFloat scale(kBoundPrecision), corr(kBoundPrecision);
  for (std::size_t i = 0; i < n; ++i) {
    if (frozen[i]) continue;
    evaluate_at(L, re[i], im[i], true, w);
    if (w.abs_p <= w.mu) {
      frozen[i] = true;
      continue;
    }
    if (mpfr_zero_p(w.dr.get()) && mpfr_zero_p(w.di.get())) {
      // Stationary point of q: nudge off it deterministically.
      mpfr_set_ui(w.t1.get(), 1, MPFR_RNDN);
      mpfr_mul_2si(w.t1.get(), w.t1.get(), -static_cast<long>(L.prec / 2), MPFR_RNDN);
      mpfr_add(re[i].get(), re[i].get(), w.t1.get(), MPFR_RNDN);
      mpfr_add(im[i].get(), im[i].get(), w.t1.get(), MPFR_RNDN);
      progress = true;
      continue;
    }
    // N = q / q'
    mpfr_sqr(w.t1.get(), w.dr.get(), MPFR_RNDN);
    mpfr_sqr(w.t2.get(), w.di.get(), MPFR_RNDN);
    mpfr_add(w.t3.get(), w.t1.get(), w.t2.get(), MPFR_RNDN);
    mpfr_mul(w.t1.get(), w.pr.get(), w.dr.get(), MPFR_RNDN);
    mpfr_mul(w.t2.get(), w.pi.get(), w.di.get(), MPFR_RNDN);
    mpfr_add(w.nr.get(), w.t1.get(), w.t2.get(), MPFR_RNDN);
    mpfr_div(w.nr.get(), w.nr.get(), w.t3.get(), MPFR_RNDN);
    mpfr_mul(w.t1.get(), w.pi.get(), w.dr.get(), MPFR_RNDN);
    mpfr_mul(w.t2.get(), w.pr.get(), w.di.get(), MPFR_RNDN);
    mpfr_sub(w.ni.get(), w.t1.get(), w.t2.get(), MPFR_RNDN);
    mpfr_div(w.ni.get(), w.ni.get(), w.t3.get(), MPFR_RNDN);

    // S = sum_{j != i} 1 / (z_i - z_j)
    mpfr_set_zero(w.sr.get(), 1);
    mpfr_set_zero(w.si.get(), 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      mpfr_sub(w.pr.get(), re[i].get(), re[j].get(), MPFR_RNDN);
      mpfr_sub(w.pi.get(), im[i].get(), im[j].get(), MPFR_RNDN);
      mpfr_fmma(w.t1.get(), w.pr.get(), w.pr.get(), w.pi.get(), w.pi.get(), MPFR_RNDN);
      if (mpfr_zero_p(w.t1.get())) continue;
      mpfr_ui_div(w.t1.get(), 1, w.t1.get(), MPFR_RNDN);
      mpfr_mul(w.pr.get(), w.pr.get(), w.t1.get(), MPFR_RNDN);
      mpfr_mul(w.pi.get(), w.pi.get(), w.t1.get(), MPFR_RNDN);
      mpfr_add(w.sr.get(), w.sr.get(), w.pr.get(), MPFR_RNDN);
      mpfr_sub(w.si.get(), w.si.get(), w.pi.get(), MPFR_RNDN);
    }

    // den = 1 - N S ; w = N / den
    mpfr_mul(w.t1.get(), w.nr.get(), w.sr.get(), MPFR_RNDN);
    mpfr_mul(w.t2.get(), w.ni.get(), w.si.get(), MPFR_RNDN);
    mpfr_sub(w.t1.get(), w.t1.get(), w.t2.get(), MPFR_RNDN);
    mpfr_ui_sub(w.pr.get(), 1, w.t1.get(), MPFR_RNDN);
    mpfr_mul(w.t1.get(), w.nr.get(), w.si.get(), MPFR_RNDN);
    mpfr_mul(w.t2.get(), w.ni.get(), w.sr.get(), MPFR_RNDN);
    mpfr_add(w.t1.get(), w.t1.get(), w.t2.get(), MPFR_RNDN);
    mpfr_neg(w.pi.get(), w.t1.get(), MPFR_RNDN);

    mpfr_sqr(w.t1.get(), w.pr.get(), MPFR_RNDN);
    mpfr_sqr(w.t2.get(), w.pi.get(), MPFR_RNDN);
    mpfr_add(w.t3.get(), w.t1.get(), w.t2.get(), MPFR_RNDN);
    if (mpfr_zero_p(w.t3.get())) {
      // Aberth denominator vanished; fall back to the Newton step.
      mpfr_set(w.sr.get(), w.nr.get(), MPFR_RNDN);
      mpfr_set(w.si.get(), w.ni.get(), MPFR_RNDN);
    } else {
      mpfr_mul(w.t1.get(), w.nr.get(), w.pr.get(), MPFR_RNDN);
      mpfr_mul(w.t2.get(), w.ni.get(), w.pi.get(), MPFR_RNDN);
      mpfr_add(w.sr.get(), w.t1.get(), w.t2.get(), MPFR_RNDN);
      mpfr_div(w.sr.get(), w.sr.get(), w.t3.get(), MPFR_RNDN);
      mpfr_mul(w.t1.get(), w.ni.get(), w.pr.get(), MPFR_RNDN);
      mpfr_mul(w.t2.get(), w.nr.get(), w.pi.get(), MPFR_RNDN);
      mpfr_sub(w.si.get(), w.t1.get(), w.t2.get(), MPFR_RNDN);
      mpfr_div(w.si.get(), w.si.get(), w.t3.get(), MPFR_RNDN);
    }
    mpfr_sub(re[i].get(), re[i].get(), w.sr.get(), MPFR_RNDN);
    mpfr_sub(im[i].get(), im[i].get(), w.si.get(), MPFR_RNDN);

    // Progress while |w| > 2^(8 - prec) max(|z|, 1).
    mpfr_hypot(corr.get(), w.sr.get(), w.si.get(), MPFR_RNDN);
    mpfr_hypot(scale.get(), re[i].get(), im[i].get(), MPFR_RNDN);
    if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
    mpfr_mul_2si(scale.get(), scale.get(), 8 - L.prec, MPFR_RNDN);
    if (mpfr_greater_p(corr.get(), scale.get())) progress = true;
  }
  return progress;
}

struct Certificate {
  std::vector<unsigned> digits;
  BigFloat max_point_residual{kBoundPrecision};  // max (|q(z)| + mu), rounded up
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Inclusion disks D(z_i, n |q(z_i)| / |prod_{j != i}(z_i - z_j)|): their union
// holds every root and a connected component of m disks holds exactly m.
Certificate certify(const Level& L, const std::vector<BigFloat>& re,
                    const std::vector<BigFloat>& im, Workspace& w) {
  const std::size_t n = L.degree();
  Certificate cert;
  std::vector<BigFloat> radius(n, BigFloat(kBoundPrecision));
  BigFloat prod(kBoundPrecision), dist(kBoundPrecision), num(kBoundPrecision);
  BigFloat dr(L.prec), di(L.prec);

  for (std::size_t i = 0; i < n; ++i) {
    evaluate_at(L, re[i], im[i], false, w);
    mpfr_add(num.get(), w.abs_p.get(), w.mu.get(), MPFR_RNDU);
    cert.max_point_residual = max(cert.max_point_residual, num);
    mpfr_set_ui(prod.get(), 1, MPFR_RNDD);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      mpfr_sub(dr.get(), re[i].get(), re[j].get(), MPFR_RNDN);
      mpfr_sub(di.get(), im[i].get(), im[j].get(), MPFR_RNDN);
      mpfr_hypot(dist.get(), dr.get(), di.get(), MPFR_RNDD);
      mpfr_mul(prod.get(), prod.get(), dist.get(), MPFR_RNDD);
    }
    if (mpfr_zero_p(prod.get())) {
      mpfr_set_inf(radius[i].get(), 1);
      continue;
    }
    mpfr_mul_ui(num.get(), num.get(), n, MPFR_RNDU);
    mpfr_div(radius[i].get(), num.get(), prod.get(), MPFR_RNDU);
    // Slack for the rounding of the pairwise differences.
    mpfr_mul_d(radius[i].get(), radius[i].get(), 1.0 + 0x1p-40, MPFR_RNDU);
  }

  auto distance = [&](std::size_t i, std::size_t j, mpfr_rnd_t rnd) {
    mpfr_sub(dr.get(), re[i].get(), re[j].get(), MPFR_RNDN);
    mpfr_sub(di.get(), im[i].get(), im[j].get(), MPFR_RNDN);
    mpfr_hypot(dist.get(), dr.get(), di.get(), rnd);
  };

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  BigFloat reach(kBoundPrecision);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      mpfr_add(reach.get(), radius[i].get(), radius[j].get(), MPFR_RNDU);
      distance(i, j, MPFR_RNDD);
      if (mpfr_lessequal_p(dist.get(), reach.get())) {
        parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
  }
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[find_root(parent, i)].push_back(i);

  const auto digit_cap = static_cast<unsigned>(std::floor(L.prec * 0.30102999566398120));
  // Per-root error first, then one error and one magnitude per cluster so
  // every member reports the same digits.
  std::vector<BigFloat> err(n, BigFloat(kBoundPrecision)), mag(n, BigFloat(kBoundPrecision));
  for (std::size_t i = 0; i < n; ++i) {
    mpfr_set(err[i].get(), radius[i].get(), MPFR_RNDU);
    for (std::size_t j : members[find_root(parent, i)]) {
      if (j == i) continue;
      distance(i, j, MPFR_RNDU);
      mpfr_add(dist.get(), dist.get(), radius[j].get(), MPFR_RNDU);
      mpfr_max(err[i].get(), err[i].get(), dist.get(), MPFR_RNDU);
    }
    mpfr_hypot(mag[i].get(), re[i].get(), im[i].get(), MPFR_RNDD);
    if (mpfr_cmp_ui(mag[i].get(), 1) < 0) mpfr_set_ui(mag[i].get(), 1, MPFR_RNDN);
  }
  cert.digits.assign(n, 0);
  BigFloat e(kBoundPrecision), m(kBoundPrecision);
  for (std::size_t root = 0; root < n; ++root) {
    if (members[root].empty()) continue;
    mpfr_set_zero(e.get(), 1);
    mpfr_set_inf(m.get(), 1);
    for (std::size_t i : members[root]) {
      mpfr_max(e.get(), e.get(), err[i].get(), MPFR_RNDU);
      mpfr_min(m.get(), m.get(), mag[i].get(), MPFR_RNDD);
    }
    unsigned digits = 0;
    if (mpfr_zero_p(e.get())) {
      digits = digit_cap;
    } else if (mpfr_number_p(e.get())) {
      mpfr_div(e.get(), e.get(), m.get(), MPFR_RNDU);
      mpfr_log10(e.get(), e.get(), MPFR_RNDU);
      const double d = -mpfr_get_d(e.get(), MPFR_RNDU);
      digits = d <= 0 ? 0u : std::min(digit_cap, static_cast<unsigned>(std::floor(d)));
    }
    for (std::size_t i : members[root]) cert.digits[i] = digits;
  }
  return cert;
}

std::vector<BigComplex> reconstruct(const std::vector<BigComplex>& roots, Precision prec) {
  const std::size_t n = roots.size();
  std::vector<BigComplex> e(n + 1, BigComplex(prec));
  e[0] = BigComplex(Rat(1), Rat(0), prec);
  BigFloat t1(prec), t2(prec), ar(prec), ai(prec);
  for (std::size_t m = 0; m < n; ++m) {
    const BigFloat& zr = roots[m].real();
    const BigFloat& zi = roots[m].imag();
    e[m + 1] = e[m];
    for (std::size_t k = m + 1; k-- > 0;) {
      // e_k <- e_{k-1} - z e_k
      mpfr_mul(t1.get(), e[k].real().get(), zr.get(), MPFR_RNDN);
      mpfr_mul(t2.get(), e[k].imag().get(), zi.get(), MPFR_RNDN);
      mpfr_sub(ar.get(), t1.get(), t2.get(), MPFR_RNDN);
      mpfr_mul(t1.get(), e[k].real().get(), zi.get(), MPFR_RNDN);
      mpfr_mul(t2.get(), e[k].imag().get(), zr.get(), MPFR_RNDN);
      mpfr_add(ai.get(), t1.get(), t2.get(), MPFR_RNDN);
      if (k > 0) {
        mpfr_sub(e[k].real().get(), e[k - 1].real().get(), ar.get(), MPFR_RNDN);
        mpfr_sub(e[k].imag().get(), e[k - 1].imag().get(), ai.get(), MPFR_RNDN);
      } else {
        mpfr_neg(e[0].real().get(), ar.get(), MPFR_RNDN);
        mpfr_neg(e[0].imag().get(), ai.get(), MPFR_RNDN);
      }
    }
  }
  // The loop above shifted e[m] into e[m+1] before updating, so e[n] is the
  // leading coefficient 1 and e[0..n-1] hold the lower coefficients.
  return e;
}

BigFloat backward_error(const std::vector<Rat>& monic, const std::vector<BigComplex>& roots,
                        Precision prec, const BigFloat& point_residual) {
  BigFloat norm(kBoundPrecision);
  for (const auto& c : monic) {
    BigFloat a(abs(c), kBoundPrecision);
    norm = max(norm, a);
  }
  // Guard bits cover the growth of prod (x + |z_i|) during reconstruction.
  long growth = 0;
  for (const auto& z : roots) {
    const BigFloat r = abs(z);
    BigFloat one_plus(kBoundPrecision);
    mpfr_add_ui(one_plus.get(), r.get(), 1, MPFR_RNDU);
    growth += std::max<long>(1, mpfr_get_exp(one_plus.get()));
  }
  const Precision rprec =
      prec + growth + 64 + static_cast<Precision>(std::bit_width(roots.size()));
  const auto rebuilt = reconstruct(roots, rprec);
  BigFloat worst(kBoundPrecision), diff(kBoundPrecision);
  for (std::size_t k = 0; k < monic.size(); ++k) {
    const BigComplex target(monic[k], Rat(0), rprec);
    const BigComplex d = rebuilt[k] - target;
    mpfr_hypot(diff.get(), d.real().get(), d.imag().get(), MPFR_RNDU);
    worst = max(worst, diff);
  }
  BigFloat result = max(worst, point_residual);
  mpfr_div(result.get(), result.get(), norm.get(), MPFR_RNDU);
  mpfr_mul_d(result.get(), result.get(), 1.0 + 0x1p-40, MPFR_RNDU);
  return result;
}

BigFloat real_tolerance_for(const BigFloat& scale, unsigned target_digits) {
  BigFloat tol(kBoundPrecision);
  BigFloat e(-static_cast<double>(target_digits) / 3.0, kBoundPrecision);
  mpfr_ui_pow(tol.get(), 10, e.get(), MPFR_RNDN);
  return tol * BigFloat(scale, kBoundPrecision);
}

std::vector<bool> flags_for(const std::vector<BigComplex>& roots, const BigFloat& tol) {
  std::vector<bool> flags(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    flags[i] = abs(roots[i].imag()) <= tol;
  }
  return flags;
}

}  // namespace

namespace {

void require_degree(const Poly& p, unsigned target_digits) {
  const auto deg = p.degree();
  if (!deg || *deg < 1) throw std::invalid_argument("root finding needs degree >= 1");
  if (target_digits == 0) throw std::invalid_argument("target_digits must be positive");
}

// Precision-doubling driver shared by find_roots and refine_roots. When
// `iterate_first` is false the approximations are taken as already converged
// at `prec` and only certified there before any doubling.
RootSet run_levels(const std::vector<Rat>& monic, std::vector<BigFloat> re,
                   std::vector<BigFloat> im, Precision prec, bool iterate_first,
                   unsigned target_digits, const RootFinderOptions& options) {
  const std::size_t n = monic.size() - 1;
  const unsigned max_iter =
      options.max_iterations ? options.max_iterations : static_cast<unsigned>(100 + 2 * n);
  bool iterate = iterate_first;
  while (true) {
    const Level level(monic, prec);
    Workspace w(prec);
    for (auto& v : re) mpfr_prec_round(v.get(), prec, MPFR_RNDN);
    for (auto& v : im) mpfr_prec_round(v.get(), prec, MPFR_RNDN);

    if (iterate) {
      std::vector<bool> frozen(n, false);
      for (unsigned it = 0; it < max_iter; ++it) {
        if (!aberth_sweep(level, re, im, frozen, w)) break;
      }
    }
    iterate = true;

    Certificate cert = certify(level, re, im, w);
    const bool done = std::all_of(cert.digits.begin(), cert.digits.end(),
                                  [&](unsigned d) { return d >= target_digits; });
    if (done) {
      RootSet rs;
      rs.roots.reserve(n);
      for (std::size_t i = 0; i < n; ++i) rs.roots.emplace_back(re[i], im[i]);
      rs.source_degree = n;
      rs.precision = prec;
      rs.target_digits = target_digits;
      rs.certified_digits = std::move(cert.digits);
      rs.residual_bound = backward_error(monic, rs.roots, prec, cert.max_point_residual);
      BigFloat scale = max(max_radius(rs), BigFloat(1L, kBoundPrecision));
      rs.real_tolerance = real_tolerance_for(scale, target_digits);
      rs.real_flags = flags_for(rs.roots, rs.real_tolerance);
      return rs;
    }
    if (prec > options.precision_ceiling / 2) {
      throw NoConvergence("roots not certified to " + std::to_string(target_digits) +
                          " digits below " + std::to_string(options.precision_ceiling) +
                          " bits");
    }
    prec *= 2;
  }
}

}  // namespace

RootSet find_roots(const Poly& p, unsigned target_digits, const RootFinderOptions& options) {
  require_degree(p, target_digits);
  const std::size_t n = *p.degree();
  const std::vector<Rat> monic = p.monic().coeffs();

  const Precision prec = std::max<Precision>(options.initial_precision, MPFR_PREC_MIN);
  if (prec > options.precision_ceiling) {
    throw NoConvergence("initial precision exceeds the ceiling");
  }

  std::vector<BigFloat> re, im;
  re.reserve(n);
  im.reserve(n);
  const BigFloat radius(fujiwara_bound(monic), prec);
  const BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
  BigFloat angle(prec), c(prec), s(prec);
  for (std::size_t j = 0; j < n; ++j) {
    angle = two_pi * BigFloat(static_cast<long>(j), prec) / BigFloat(static_cast<long>(n), prec) +
            BigFloat(kAngleOffset, prec);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    re.push_back(radius * c);
    im.push_back(radius * s);
  }
  return run_levels(monic, std::move(re), std::move(im), prec, true, target_digits, options);
}

RootSet refine_roots(const Poly& p, const RootSet& rs, unsigned target_digits,
                     const RootFinderOptions& options) {
  require_degree(p, target_digits);
  if (rs.roots.size() != *p.degree()) {
    throw std::invalid_argument("root set does not match the polynomial degree");
  }
  std::vector<BigFloat> re, im;
  for (const auto& z : rs.roots) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return run_levels(p.monic().coeffs(), std::move(re), std::move(im), rs.precision, false,
                    target_digits, options);
}

RootSet realness(const RootSet& rs, const BigFloat& scale) {
  RootSet out = rs;
  out.real_tolerance = real_tolerance_for(scale, rs.target_digits);
  out.real_flags = flags_for(out.roots, out.real_tolerance);
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    if (out.real_flags[i]) mpfr_set_zero(out.roots[i].imag().get(), 1);
  }
  return out;
}

BigFloat max_radius(const RootSet& rs) {
  if (rs.roots.empty()) throw std::invalid_argument("empty root set");
  BigFloat best(rs.roots.front().precision());
  for (const auto& z : rs.roots) best = max(best, abs(z));
  return best;
}

std::vector<BigComplex> reconstruct_monic(const RootSet& rs, Precision prec) {
  return reconstruct(rs.roots, prec);
}

std::string to_csv(const RootSet& rs) {
  std::ostringstream out;
  out << "index,re,im,real_flag,certified_digits\n";
  const unsigned digits = std::max(1u, rs.target_digits);
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    out << i << ',' << rs.roots[i].real().to_string(digits) << ','
        << rs.roots[i].imag().to_string(digits) << ','
        << (i < rs.real_flags.size() && rs.real_flags[i] ? 1 : 0) << ','
        << (i < rs.certified_digits.size() ? rs.certified_digits[i] : 0) << '\n';
  }
  return out.str();
}

}  // namespace bk
