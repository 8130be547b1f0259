#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bk/bigfloat.hpp"
#include "bk/poly.hpp"

namespace bk {

// All roots of one exact polynomial, with multiplicity.
struct RootSet {
  std::vector<BigComplex> roots;
  std::size_t source_degree = 0;
  Precision precision = 0;
  unsigned target_digits = 0;
  // Normwise backward error of the roots relative to the monic input q with
  // ||q|| = max |q_k|: bounds both max_i |q(root_i)| / ||q|| and the
  // coefficientwise distance between prod (x - root_i) and q, over ||q||.
  BigFloat residual_bound;
  // Decimal digits certified by inclusion disks, measured relative to
  // max(|root|, 1). Clustered roots share the cluster diameter.
  std::vector<unsigned> certified_digits;
  std::vector<bool> real_flags;
  // |Im root| <= real_tolerance  <=>  real_flags[i].
  BigFloat real_tolerance;
};

struct RootFinderOptions {
  Precision initial_precision = 128;
  Precision precision_ceiling = 65536;
  // Per precision level; 0 selects 100 + 2 * degree.
  unsigned max_iterations = 0;
};

// Aberth-Ehrlich simultaneous iteration on the monic-normalized input.
// Starts on the circle of radius equal to the Fujiwara bound at angles
// 2 pi j / n + 0.4 and doubles the working precision, warm-starting from the
// previous level, until every root is certified to `target_digits`.
// Throws std::invalid_argument for degree < 1 and NoConvergence when the
// precision would exceed the ceiling.
RootSet find_roots(const Poly& p, unsigned target_digits,
                   const RootFinderOptions& options = {});

// Continues the precision-doubling schedule of find_roots from a result it
// produced: certifies `rs` at its own precision first, then doubles. For a
// set returned by find_roots(p, d) this reproduces find_roots(p, e), e >= d.
RootSet refine_roots(const Poly& p, const RootSet& rs, unsigned target_digits,
                     const RootFinderOptions& options = {});

// Copy with flags recomputed against scale * 10^(-target_digits / 3) and the
// imaginary part of every flagged root set to zero.
RootSet realness(const RootSet& rs, const BigFloat& scale);

// max |root|. Requires a nonempty set.
BigFloat max_radius(const RootSet& rs);

// Coefficients of prod (x - root_i), ascending, computed at `prec` bits.
std::vector<BigComplex> reconstruct_monic(const RootSet& rs, Precision prec);

// Header "index,re,im,real_flag,certified_digits"; numbers carry
// target_digits significant digits.
std::string to_csv(const RootSet& rs);

}  // namespace bk
