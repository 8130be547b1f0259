#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bk/bigfloat.hpp"
#include "bk/diff_operator.hpp"
#include "bk/rational.hpp"

namespace bk::cli {

enum ExitCode : int {
  kOk = 0,
  kNotAdmissible = 1,
  kUsage = 2,
  kDegenerate = 3,
  kNotCertified = 4,
};

struct Probe {
  std::string label;
  Rat re;
  Rat im;
};

// "2", "-3", "1+1i", "0.5-2i", "-i", "3/2i". Throws ParseError.
Probe parse_probe(const std::string& text);
std::vector<Probe> parse_probes(const std::string& csv);

// Positive, strictly increasing integers. Throws ParseError.
std::vector<std::size_t> parse_n_list(const std::string& csv);

// "a,b" with a < b. Throws ParseError.
std::pair<Rat, Rat> parse_law(const std::string& text);

// An operator given by catalog tag or JSON file, plus the law its compact
// family implies (nullopt for files and unbounded families).
struct ResolvedOperator {
  std::string source;
  DiffOperator op;
  std::optional<std::pair<Rat, Rat>> default_law;
};

ResolvedOperator resolve_operator(const std::string& tag, const std::string& file);

// Histogram of the real parts of `atoms` on [-1, 1] with an optional reference
// density drawn as a polyline.
std::string histogram_svg(const std::vector<BigComplex>& atoms,
                          const std::optional<std::pair<double, double>>& arcsine_support);

// Full command line; returns the process exit status.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace bk::cli
