#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bk/classical.hpp"
#include "bk/errors.hpp"
#include "bk/measures.hpp"
#include "bk/roots.hpp"

namespace bk::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Probe parse_probe(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("probes", "empty probe");
  Probe p{s, 0, 0};
  try {
    if (s.back() != 'i') {
      p.re = parse_decimal(s);
      return p;
    }
    const std::string body = s.substr(0, s.size() - 1);
    // The sign that starts the imaginary part: last +/- not at the front
    // and not inside an exponent.
    std::size_t cut = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        cut = i;
        break;
      }
    }
    const std::string re = cut == std::string::npos ? "" : body.substr(0, cut);
    std::string im = cut == std::string::npos ? body : body.substr(cut);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    if (im.front() == '+') im.erase(0, 1);
    p.re = re.empty() ? Rat(0) : parse_decimal(re);
    p.im = parse_decimal(im);
  } catch (const ParseError&) {
    throw ParseError("probes", "cannot read '" + s + "' as re+imi");
  }
  return p;
}

std::vector<Probe> parse_probes(const std::string& csv) {
  std::vector<Probe> out;
  for (const auto& part : split(csv, ',')) out.push_back(parse_probe(part));
  if (out.empty()) throw ParseError("probes", "no probe points");
  return out;
}

std::vector<std::size_t> parse_n_list(const std::string& csv) {
  std::vector<std::size_t> out;
  for (const auto& raw : split(csv, ',')) {
    const std::string s = strip(raw);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
      throw ParseError("n-list", "not a positive integer: '" + s + "'");
    }
    const std::size_t n = std::stoul(s);
    if (n == 0) throw ParseError("n-list", "n must be positive");
    if (!out.empty() && n <= out.back()) throw ParseError("n-list", "must be strictly increasing");
    out.push_back(n);
  }
  if (out.empty()) throw ParseError("n-list", "empty");
  return out;
}

std::pair<Rat, Rat> parse_law(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("law", "expected a,b");
  Rat a, b;
  try {
    a = parse_decimal(strip(parts[0]));
    b = parse_decimal(strip(parts[1]));
  } catch (const ParseError&) {
    throw ParseError("law", "expected two numbers, got '" + text + "'");
  }
  if (!(a < b)) throw ParseError("law", "needs a < b");
  return {a, b};
}

ResolvedOperator resolve_operator(const std::string& tag, const std::string& file) {
  if (tag.empty() == file.empty()) throw ParseError("op", "give exactly one of --op or --op-file");
  if (!tag.empty()) {
    const Family f = Family::parse(tag);
    return {f.to_string(), bochner_operator(f), f.interval()};
  }
  std::ifstream in(file);
  if (!in) throw ParseError("op-file", "cannot open '" + file + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("op-file", std::string("invalid JSON: ") + e.what());
  }
  return {file, operator_from_json(j), std::nullopt};
}

std::string histogram_svg(const std::vector<BigComplex>& atoms,
                          const std::optional<std::pair<double, double>>& arcsine_support) {
  constexpr int kBins = 40;
  constexpr double kW = 640, kH = 360, kMargin = 40;
  std::vector<int> counts(kBins, 0);
  for (const auto& z : atoms) {
    const double x = z.real().to_double();
    int bin = static_cast<int>(std::floor((x + 1.0) / 2.0 * kBins));
    bin = std::clamp(bin, 0, kBins - 1);
    ++counts[bin];
  }
  const double width = 2.0 / kBins;
  const double n = static_cast<double>(atoms.size());
  double ymax = 2.0;
  for (int c : counts) ymax = std::max(ymax, c / (n * width));
  ymax *= 1.1;

  auto px = [&](double x) { return kMargin + (x + 1.0) / 2.0 * (kW - 2 * kMargin); };
  auto py = [&](double y) { return kH - kMargin - y / ymax * (kH - 2 * kMargin); };
  char buf[256];
  std::string svg;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n",
                kW, kH, kW, kH);
  svg += buf;
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                px(-1), py(0), px(1), py(0));
  svg += buf;
  for (int i = 0; i < kBins; ++i) {
    const double h = counts[i] / (n * width);
    const double x0 = px(-1 + i * width), x1 = px(-1 + (i + 1) * width);
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"steelblue\" "
                  "stroke=\"white\"/>\n",
                  x0, py(h), x1 - x0, py(0) - py(h));
    svg += buf;
  }
  if (arcsine_support) {
    const auto [a, b] = *arcsine_support;
    std::string points;
    constexpr int kSamples = 400;
    for (int i = 1; i < kSamples; ++i) {
      const double x = a + (b - a) * i / kSamples;
      if (x <= -1 || x >= 1) continue;
      const double y = std::min(ymax, 1.0 / (M_PI * std::sqrt((b - x) * (x - a))));
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(x), py(y));
      points += buf;
    }
    if (!points.empty()) points.pop_back();
    svg += "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\" points=\"" + points +
           "\"/>\n";
  }
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\">-1</text>\n"
                "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\">1</text>\n",
                px(-1) - 6, kH - kMargin / 2, px(1) - 4, kH - kMargin / 2);
  svg += buf;
  svg += "</svg>\n";
  return svg;
}

namespace {

struct Config {
  std::string op_tag;
  std::string op_file;
  std::size_t n = 0;
  std::string n_list_text;
  std::string law_text;
  unsigned digits = 30;
  std::string probes_text = "2,1+1i,-3,10";
  std::string out_dir;
  std::string moments_file;
  bool allow_degenerate = false;
  unsigned jobs = 0;
};

constexpr unsigned kSummaryDigits = 17;

std::string fmt(const BigFloat& v) { return v.to_string(kSummaryDigits); }

Precision precision_ceiling() {
  const char* env = std::getenv("BK_PRECISION_CEILING");
  if (env == nullptr || *env == '\0') return RootFinderOptions{}.precision_ceiling;
  const std::string s = env;
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
    throw ParseError("BK_PRECISION_CEILING", "not a positive integer: '" + s + "'");
  }
  const long v = std::stol(s);
  if (v < 64) throw ParseError("BK_PRECISION_CEILING", "must be at least 64 bits");
  return v;
}

// Everything computed for one n.
struct Row {
  std::size_t n = 0;
  Rat eigenvalue;
  std::vector<std::size_t> free_indices;
  Poly polynomial;
  RootSet roots;  // imaginary parts of real-flagged roots zeroed
  BigFloat max_radius;
  bool all_real = false;
  unsigned min_certified = 0;
  std::optional<BigFloat> ks;
  std::vector<std::optional<BigFloat>> residuals;  // nullopt: probe too close to a root
};

struct Experiment {
  const DiffOperator* op;
  std::optional<ArcsineLaw> law;
  std::vector<Probe> probes;
  unsigned digits;
  bool allow_degenerate;
  RootFinderOptions root_options;
  bool residual_defined;
};

Row compute_row(const Experiment& ex, std::size_t n) {
  Row row;
  row.n = n;
  EigenSolution sol = solve_eigenpolynomial(
      *ex.op, n,
      ex.allow_degenerate ? DegeneracyPolicy::kZeroFreeCoordinates : DegeneracyPolicy::kError);
  row.eigenvalue = sol.eigenvalue;
  row.free_indices = sol.free_indices;
  row.polynomial = std::move(sol.polynomial);

  RootSet rs = find_roots(row.polynomial, ex.digits, ex.root_options);
  row.max_radius = max_radius(rs);
  const BigFloat one(1L, row.max_radius.precision());
  row.roots = realness(rs, max(one, row.max_radius));
  row.all_real = std::all_of(row.roots.real_flags.begin(), row.roots.real_flags.end(),
                             [](bool f) { return f; });
  row.min_certified = *std::min_element(row.roots.certified_digits.begin(),
                                        row.roots.certified_digits.end());
  const RootMeasure m = root_measure(row.roots);
  if (ex.law && row.all_real) row.ks = ks_distance(m, *ex.law);

  if (ex.residual_defined) {
    ProbeOptions po;
    po.precision = bits_for_digits(ex.digits) + 32;
    po.min_distance = BigFloat(row.roots.real_tolerance, 64) * BigFloat(10L, 64);
    for (const auto& probe : ex.probes) {
      const BigComplex x(probe.re, probe.im, po.precision);
      try {
        row.residuals.emplace_back(cauchy_residual(*ex.op, row.polynomial, x, po));
      } catch (const ProbeTooCloseToRoot&) {
        row.residuals.emplace_back(std::nullopt);
      }
    }
  }
  return row;
}

// Per-n jobs on up to `jobs` threads; rows come back in input order and the
// first failure (in input order) is rethrown.
std::vector<Row> compute_rows(const Experiment& ex, const std::vector<std::size_t>& ns,
                              unsigned jobs) {
  std::vector<Row> rows(ns.size());
  std::vector<std::exception_ptr> errors(ns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < ns.size();) {
      try {
        rows[i] = compute_row(ex, ns[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, ns.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

json law_json(const std::optional<ArcsineLaw>& law) {
  if (!law) return nullptr;
  return {{"a", to_string(law->a())}, {"b", to_string(law->b())}};
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("out", "cannot write '" + path.string() + "'");
  out << content;
}

std::string dist_csv(const Row& row, unsigned digits) {
  const RootMeasure m = root_measure(row.roots);
  const auto& atoms = m.atoms();
  const std::size_t n = atoms.size();
  std::string csv = "x,F\n";
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s + 1;
    while (e < n && atoms[e].real() == atoms[s].real()) ++e;
    const BigFloat f(ratio(static_cast<long>(e), n), 64);
    csv += atoms[s].real().to_string(digits) + "," + f.to_string(kSummaryDigits) + "\n";
    s = e;
  }
  return csv;
}

struct Prepared {
  ResolvedOperator resolved;
  Experiment ex;
  std::vector<std::size_t> ns;
  json config;
  json notes = json::array();
};

Prepared prepare(const Config& cfg, bool need_list) {
  ResolvedOperator resolved = resolve_operator(cfg.op_tag, cfg.op_file);
  std::vector<std::size_t> ns;
  if (!cfg.n_list_text.empty() && cfg.n != 0) throw ParseError("n", "give --n or --n-list, not both");
  if (!cfg.n_list_text.empty()) {
    ns = parse_n_list(cfg.n_list_text);
  } else if (cfg.n != 0) {
    ns = {cfg.n};
  } else {
    throw ParseError("n-list", "missing");
  }
  if (need_list && ns.size() < 5) throw ParseError("n-list", "sweep needs at least 5 values of n");
  if (cfg.digits < 1 || cfg.digits > 10000) throw ParseError("digits", "must lie in 1..10000");

  std::optional<std::pair<Rat, Rat>> law_bounds = resolved.default_law;
  if (!cfg.law_text.empty()) law_bounds = parse_law(cfg.law_text);

  Prepared p{std::move(resolved), Experiment{}, ns, json::object()};
  const AdmissibilityReport report = validate(p.resolved.op);
  if (!report.admissible) throw NotAdmissible("operator is not admissible");

  p.ex.op = &p.resolved.op;
  if (law_bounds) p.ex.law.emplace(law_bounds->first, law_bounds->second);
  p.ex.probes = parse_probes(cfg.probes_text);
  p.ex.digits = cfg.digits;
  p.ex.allow_degenerate = cfg.allow_degenerate;
  p.ex.root_options.precision_ceiling = precision_ceiling();
  p.ex.residual_defined = report.spectral_growth;

  json probes = json::array();
  for (const auto& pr : p.ex.probes) probes.push_back(pr.label);
  p.config = {{"op", p.resolved.source},
              {"n_list", ns},
              {"digits", cfg.digits},
              {"law", law_json(p.ex.law)},
              {"probes", probes},
              {"allow_degenerate", cfg.allow_degenerate},
              {"precision_ceiling", p.ex.root_options.precision_ceiling}};

  if (!p.ex.law) p.notes.push_back("no law configured: ks omitted");
  if (!p.ex.residual_defined) {
    p.notes.push_back("deg a_N < N: Cauchy-transform residual undefined, residuals omitted");
  }
  return p;
}

json row_json(const Prepared& p, const Row& row) {
  json r = {{"n", row.n},
            {"eigenvalue", to_string(row.eigenvalue)},
            {"max_radius", fmt(row.max_radius)},
            {"all_real", row.all_real},
            {"precision", row.roots.precision},
            {"min_certified_digits", row.min_certified},
            {"residual_bound", row.roots.residual_bound.to_string(6)}};
  if (!row.free_indices.empty()) r["free_indices"] = row.free_indices;
  if (row.ks) r["ks"] = fmt(*row.ks);
  if (p.ex.residual_defined) {
    json res = json::array();
    for (std::size_t i = 0; i < p.ex.probes.size(); ++i) {
      const auto& v = row.residuals[i];
      res.push_back({{"x", p.ex.probes[i].label}, {"value", v ? json(fmt(*v)) : json(nullptr)}});
      if (p.ex.probes[i].re == 2 && p.ex.probes[i].im == 0 && v) r["residual_x2"] = fmt(*v);
    }
    r["residuals"] = res;
  }
  return r;
}

void add_row_notes(Prepared& p, const Row& row) {
  const std::string at = "n=" + std::to_string(row.n) + ": ";
  if (p.ex.law && !row.all_real) p.notes.push_back(at + "roots not all real, ks omitted");
  if (!row.free_indices.empty()) {
    p.notes.push_back(at + "degenerate spectrum, free coordinates set to zero");
  }
  for (std::size_t i = 0; i < row.residuals.size(); ++i) {
    if (!row.residuals[i]) {
      p.notes.push_back(at + "probe " + p.ex.probes[i].label + " too close to a root");
    }
  }
}

json growth(const std::vector<Row>& rows) {
  if (rows.size() < 5) return nullptr;
  std::vector<std::pair<std::size_t, BigFloat>> series;
  for (const auto& r : rows) series.emplace_back(r.n, r.max_radius);
  return fmt(growth_exponent(series));
}

void require_certified(const std::vector<Row>& rows) {
  for (const auto& r : rows) {
    if (r.min_certified < r.roots.target_digits) {
      throw NoConvergence("roots of degree " + std::to_string(r.n) + " certified to only " +
                          std::to_string(r.min_certified) + " digits");
    }
  }
}

int cmd_validate(const Config& cfg, std::ostream& out) {
  const ResolvedOperator resolved = resolve_operator(cfg.op_tag, cfg.op_file);
  const AdmissibilityReport report = validate(resolved.op);
  json j = to_json(report);
  int status = report.admissible ? kOk : kNotAdmissible;
  if (!cfg.moments_file.empty()) {
    std::ifstream in(cfg.moments_file);
    if (!in) throw ParseError("moments", "cannot open '" + cfg.moments_file + "'");
    json mj;
    try {
      mj = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ParseError("moments", std::string("invalid JSON: ") + e.what());
    }
    const MomentFunctional sigma = moments_from_json(mj);
    if (report.admissible) {
      const std::size_t n_max = (sigma.size() - 1) / 2;
      const Rat defect = orthogonality_defect(resolved.op, sigma, n_max);
      j["orthogonality"] = {{"n_max", n_max}, {"defect", to_string(defect)}, {"orthogonal", defect == 0}};
      if (defect != 0) status = kNotAdmissible;
    }
  }
  out << j.dump(2) << "\n";
  return status;
}

int cmd_eigen(const Config& cfg, std::ostream& out) {
  if (cfg.n == 0) throw ParseError("n", "missing or zero");
  const ResolvedOperator resolved = resolve_operator(cfg.op_tag, cfg.op_file);
  const EigenSolution sol = solve_eigenpolynomial(
      resolved.op, cfg.n,
      cfg.allow_degenerate ? DegeneracyPolicy::kZeroFreeCoordinates : DegeneracyPolicy::kError);
  json j = {{"n", cfg.n},
            {"eigenvalue", to_string(sol.eigenvalue)},
            {"coeffs", to_json(sol.polynomial)},
            {"poly", sol.polynomial.to_string()}};
  if (!sol.free_indices.empty()) j["free_indices"] = sol.free_indices;
  out << sol.polynomial.to_string() << "\n" << j.dump() << "\n";
  return kOk;
}

int cmd_zerodist(const Config& cfg, std::ostream& out) {
  Prepared p = prepare(cfg, false);
  const std::vector<Row> rows = compute_rows(p.ex, p.ns, cfg.jobs);
  require_certified(rows);

  json jrows = json::array();
  for (const auto& row : rows) {
    jrows.push_back(row_json(p, row));
    add_row_notes(p, row);
  }
  json report = {{"config", p.config},
                 {"op", to_json(p.resolved.op)},
                 {"law", law_json(p.ex.law)},
                 {"rows", jrows},
                 {"growth_exponent", growth(rows)},
                 {"notes", p.notes}};
  const std::string text = report.dump(2) + "\n";
  if (!cfg.out_dir.empty()) {
    fs::create_directories(cfg.out_dir);
    write_file(fs::path(cfg.out_dir) / "report.json", text);
    for (const auto& row : rows) {
      const std::string n = std::to_string(row.n);
      write_file(fs::path(cfg.out_dir) / ("roots_" + n + ".csv"), to_csv(row.roots));
      if (row.all_real) {
        write_file(fs::path(cfg.out_dir) / ("dist_" + n + ".csv"), dist_csv(row, cfg.digits));
      }
    }
  }
  out << text;
  return kOk;
}

BigFloat moment_distance(const RootMeasure& a, const RootMeasure& b) {
  BigFloat worst(64);
  for (unsigned k = 1; k <= 8; ++k) worst = max(worst, BigFloat(abs(moment(a, k) - moment(b, k)), 64));
  return worst;
}

int cmd_sweep(const Config& cfg, std::ostream& out) {
  Prepared p = prepare(cfg, true);
  const std::vector<Row> rows = compute_rows(p.ex, p.ns, cfg.jobs);
  require_certified(rows);

  std::vector<RootMeasure> scaled;
  for (const auto& row : rows) scaled.push_back(rescale(root_measure(row.roots), row.max_radius));

  json jrows = json::array();
  for (const auto& row : rows) {
    jrows.push_back(row_json(p, row));
    add_row_notes(p, row);
  }
  json pairs = json::array();
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    json pr = {{"n1", rows[i].n}, {"n2", rows[i + 1].n}};
    if (scaled[i].is_real() && scaled[i + 1].is_real()) {
      pr["ks"] = fmt(ks_distance(scaled[i], scaled[i + 1]));
    } else {
      pr["moment_distance"] = fmt(moment_distance(scaled[i], scaled[i + 1]));
    }
    pairs.push_back(pr);
  }
  json report = {{"config", p.config},
                 {"op", to_json(p.resolved.op)},
                 {"law", law_json(p.ex.law)},
                 {"rescaling", "max_radius"},
                 {"rows", jrows},
                 {"pairs", pairs},
                 {"growth_exponent", growth(rows)},
                 {"notes", p.notes}};
  const std::string text = report.dump(2) + "\n";
  if (!cfg.out_dir.empty()) {
    fs::create_directories(cfg.out_dir);
    write_file(fs::path(cfg.out_dir) / "report.json", text);
    for (const auto& row : rows) {
      write_file(fs::path(cfg.out_dir) / ("roots_" + std::to_string(row.n) + ".csv"),
                 to_csv(row.roots));
    }
    std::optional<std::pair<double, double>> support;
    if (p.ex.law) {
      const double r = rows.back().max_radius.to_double();
      support = std::make_pair(p.ex.law->a().get_d() / r, p.ex.law->b().get_d() / r);
    }
    write_file(fs::path(cfg.out_dir) / "hist.svg", histogram_svg(scaled.back().atoms(), support));
  }
  out << text;
  return kOk;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenpolynomials of finite-order differential operators and their zeros", "bk"};
  app.require_subcommand(1);
  Config cfg;

  auto add_op = [&](CLI::App* sub) {
    sub->add_option("--op", cfg.op_tag, "catalog family, e.g. hermite or jacobi:alpha=1,beta=2");
    sub->add_option("--op-file", cfg.op_file, "operator JSON file");
  };
  auto add_experiment = [&](CLI::App* sub) {
    add_op(sub);
    sub->add_option("--n", cfg.n, "single degree");
    sub->add_option("--n-list", cfg.n_list_text, "comma separated degrees, increasing");
    sub->add_option("--law", cfg.law_text, "arcsine law support a,b");
    sub->add_option("--digits", cfg.digits, "target decimal digits")->capture_default_str();
    sub->add_option("--probes", cfg.probes_text, "probe points re+imi, comma separated")
        ->capture_default_str();
    sub->add_option("--out", cfg.out_dir, "directory for report.json and CSV files");
    sub->add_flag("--allow-degenerate", cfg.allow_degenerate, "zero free coordinates");
    sub->add_option("--jobs", cfg.jobs, "worker threads (default: all cores)");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check admissibility");
  add_op(validate_cmd);
  validate_cmd->add_option("--moments", cfg.moments_file, "moments JSON to check orthogonality");
  CLI::App* eigen_cmd = app.add_subcommand("eigen", "monic eigenpolynomial of degree n");
  add_op(eigen_cmd);
  eigen_cmd->add_option("--n", cfg.n, "degree")->required();
  eigen_cmd->add_flag("--allow-degenerate", cfg.allow_degenerate, "zero free coordinates");
  CLI::App* zerodist_cmd = app.add_subcommand("zerodist", "zero distributions per n");
  add_experiment(zerodist_cmd);
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "rescaled measures across n");
  add_experiment(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(cfg, out);
    if (eigen_cmd->parsed()) return cmd_eigen(cfg, out);
    if (zerodist_cmd->parsed()) return cmd_zerodist(cfg, out);
    return cmd_sweep(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BadParameters& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotAdmissible& e) {
    err << "error: " << e.what() << "\n";
    return kNotAdmissible;
  } catch (const DegenerateSpectrum& e) {
    json j = {{"error", "DegenerateSpectrum"},
              {"n", e.degree()},
              {"conflicting_indices", e.conflicting_indices()},
              {"free_indices", e.free_indices()},
              {"inconsistent_indices", e.inconsistent_indices()}};
    err << "error: " << e.what() << "\n" << j.dump() << "\n";
    return kDegenerate;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kNotCertified;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace bk::cli
