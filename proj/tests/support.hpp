#pragma once

#include <fstream>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "bk/diff_operator.hpp"
#include "bk/poly.hpp"

namespace bk::gen {

// Small rationals num/den with num in [-9, 9], den in [1, 6].
inline Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  const long p = num(rng);
  return ratio(p, static_cast<unsigned long>(den(rng)));
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Rat> c(deg(rng) + 1);
  for (auto& v : c) v = random_rat(rng);
  return Poly(std::move(c));
}

// Random admissible operator of the given order: deg a_k <= k everywhere and
// deg a_N == N.
inline DiffOperator random_admissible(std::mt19937_64& rng, unsigned order) {
  std::vector<Poly> terms(order);
  for (unsigned k = 1; k <= order; ++k) {
    std::vector<Rat> c(k + 1);
    for (auto& v : c) v = random_rat(rng);
    if (k == order && c.back() == 0) c.back() = 1;
    terms[k - 1] = Poly(std::move(c));
  }
  return DiffOperator(std::move(terms));
}

inline nlohmann::json load_json(const std::string& relative) {
  std::ifstream in(std::string(BK_DATA_DIR) + "/" + relative);
  return nlohmann::json::parse(in);
}

}  // namespace bk::gen
