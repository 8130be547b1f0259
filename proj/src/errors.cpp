#include "bk/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bk {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::vector<std::size_t> merged(std::vector<std::size_t> a,
                                const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

DegenerateSpectrum::DegenerateSpectrum(
    std::size_t n, std::vector<std::size_t> free_indices,
    std::vector<std::size_t> inconsistent_indices)
    : Error("degenerate spectrum at n=" + std::to_string(n) +
            ": lambda_j == lambda_n for j in {" +
            join(merged(free_indices, inconsistent_indices)) + "}"),
      n_(n),
      free_(std::move(free_indices)),
      inconsistent_(std::move(inconsistent_indices)) {}

std::vector<std::size_t> DegenerateSpectrum::conflicting_indices() const {
  return merged(free_, inconsistent_);
}

NotPositiveDefinite::NotPositiveDefinite(std::size_t order)
    : Error("moment functional is not positive definite at order " +
            std::to_string(order)),
      order_(order) {}

InsufficientMoments::InsufficientMoments(std::size_t required,
                                         std::size_t available)
    : Error("need " + std::to_string(required) + " moments, have " +
            std::to_string(available)),
      required_(required),
      available_(available) {}

}  // namespace bk
