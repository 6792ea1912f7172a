#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/identities.hpp"
#include "hardy/io.hpp"
#include "hardy/mtbasis.hpp"
#include "hardy/multiscale.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/torus.hpp"
#include "hardy/unwind.hpp"

namespace hardy::cli {
namespace {

using io::Json;
using torus::GridFunction;

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

Level log_level() {
  const char* env = std::getenv("HARDY_LOG");
  if (env == nullptr) return Level::warn;
  const std::string v = env;
  if (v == "error") return Level::error;
  if (v == "info") return Level::info;
  if (v == "debug") return Level::debug;
  return Level::warn;
}

void log(Level level, const std::string& message) {
  static const char* names[] = {"error", "warn", "info", "debug"};
  if (level <= log_level()) {
    std::cerr << "hardy[" << names[static_cast<int>(level)] << "]: " << message << '\n';
  }
}

std::size_t or_default(std::size_t value, std::size_t fallback) {
  return value == 0 ? fallback : value;
}
double or_default(double value, double fallback) { return value == 0.0 ? fallback : value; }
std::size_t terms_or(const RunConfig& cfg, std::size_t fallback) {
  return cfg.terms < 0 ? fallback : static_cast<std::size_t>(cfg.terms);
}

void emit(const RunConfig& cfg, const Json& report) {
  const std::string text = report.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(cfg.out, text);
    log(Level::info, "wrote " + cfg.out);
  }
}

Json base_report(const RunConfig& cfg) {
  return {{"schema_version", io::kSchemaVersion}, {"config", config_to_json(cfg)}};
}

std::pair<int, int> parse_range(const std::string& text, const std::string& flag) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw io::ParseError("flag '" + flag + "' must look like lo:hi, got '" + text + "'");
  }
}

Json strategy_json(const RunConfig& cfg) {
  if (cfg.strategy.empty()) {
    return {{"kind", "fixed_inner"}, {"inners", {{{"zeros", {{0.0, 0.0}}}}}}};
  }
  if (std::filesystem::exists(cfg.strategy)) return io::read_json_file(cfg.strategy);
  try {
    return Json::parse(cfg.strategy);
  } catch (const Json::parse_error&) {
    throw io::ParseError("--strategy is neither a file nor valid JSON");
  }
}

GridFunction read_function(const RunConfig& cfg, std::size_t grid_size) {
  if (cfg.input.empty()) throw io::ParseError("--input is required");
  return io::grid_function_from_json(io::read_json_file(cfg.input), grid_size);
}

// ---------------------------------------------------------------- verify

struct SuiteResult {
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  Json details = Json::object();
};

// e^{2 i pi x} with x reduced mod 1 first.
Complex boundary_exp(double x) { return std::exp(2.0 * kPi * kI * (x - std::round(x))); }

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

SuiteResult suite_recur(const RunConfig& cfg, std::mt19937_64& rng) {
  SuiteResult r;
  r.samples = or_default(cfg.samples, std::size_t{1000});
  r.tolerance = or_default(cfg.tol, 1e-10);
  for (std::size_t k = 0; k < r.samples; ++k) {
    r.max_residual = std::max(r.max_residual, identities::recur_residual(uniform(rng, -50, 50)));
  }
  r.pass = r.max_residual <= r.tolerance;
  return r;
}

SuiteResult suite_prounwinding(const RunConfig& cfg, std::mt19937_64& rng) {
  SuiteResult r;
  r.samples = or_default(cfg.samples, std::size_t{100});
  const std::size_t max_terms = terms_or(cfg, 8);
  // Below ~1e-15 the truncation error is swamped by rounding.
  const double floor = 8.0 * std::numeric_limits<double>::epsilon();
  r.tolerance = floor;
  std::vector<double> xs(r.samples);
  for (auto& x : xs) x = uniform(rng, -50, 50);
  Json per_terms = Json::array();
  std::vector<double> worst(max_terms + 1, 0.0);
  bool ok = true;
  for (std::size_t n = 1; n <= max_terms; ++n) {
    const double bound = identities::pro_unwinding_tail_bound(n);
    for (double x : xs) {
      const double err =
          std::abs(boundary_exp(x) - identities::pro_unwinding_partial(x, n));
      worst[n] = std::max(worst[n], err);
      r.max_residual = std::max(r.max_residual, err - bound);
      if (err > bound + floor) ok = false;
    }
    per_terms.push_back({{"terms", n}, {"max_error", worst[n]}, {"bound", bound}});
  }
  Json ratios = Json::array();
  for (std::size_t n = 1; n < max_terms; ++n) {
    if (worst[n + 1] < 1e3 * floor) break;
    const double ratio = worst[n + 1] / worst[n];
    ratios.push_back(ratio);
    if (std::abs(ratio / multiscale::kQ - 1.0) > 0.1) ok = false;
  }
  r.details = {{"per_terms", per_terms}, {"decay_ratios", ratios}, {"expected_ratio", multiscale::kQ}};
  r.pass = ok;
  return r;
}

SuiteResult suite_alpha(const RunConfig& cfg, std::mt19937_64& rng) {
  SuiteResult r;
  r.samples = or_default(cfg.samples, std::size_t{1000});
  r.tolerance = or_default(cfg.tol, 1e-10);
  Json identity = Json::object();
  for (double alpha : {0.1, 0.25, 0.5, 1.0, 2.0}) {
    double worst = 0.0;
    for (std::size_t k = 0; k < r.samples; ++k) {
      worst = std::max(worst, identities::alpha_identity_residual(alpha, uniform(rng, -50, 50)));
    }
    identity[std::to_string(alpha)] = worst;
    r.max_residual = std::max(r.max_residual, worst);
  }
  bool ok = r.max_residual <= r.tolerance;

  std::vector<double> alphas(12);
  for (auto& a : alphas) a = uniform(rng, 0.1, 1.0);
  const identities::AlphaSequence seq(alphas);
  double worst_excess = -1.0;
  for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
    const double bound = identities::alpha_series_remainder_bound(seq, n);
    for (std::size_t k = 0; k < 100; ++k) {
      const double x = uniform(rng, -50, 50);
      const double err =
          std::abs(boundary_exp(x) - identities::alpha_series_partial(seq, x, n));
      worst_excess = std::max(worst_excess, err - bound);
      if (err > bound + 1e-14) ok = false;
    }
  }

  const identities::AlphaSequence ones(std::vector<double>(11, 1.0));
  const auto c_alpha = identities::alpha_series_coefficients(ones, 10);
  const auto c_pro = identities::pro_unwinding_coefficients(10);
  double collapse = 0.0;
  for (std::size_t k = 0; k <= 10; ++k) collapse = std::max(collapse, std::abs(c_alpha[k] - c_pro[k]));
  if (collapse > 1e-12) ok = false;

  r.details = {{"identity_max_residual", identity},
               {"series_alphas", alphas},
               {"series_max_excess_over_bound", worst_excess},
               {"constant_alpha_coefficient_gap", collapse}};
  r.pass = ok;
  return r;
}

double dirac_max(std::mt19937_64& rng, std::size_t samples, identities::DiracVariant variant) {
  double worst = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double magnitude = std::pow(10.0, uniform(rng, -2.0, 2.0));
    const double x = uniform(rng, 0.0, 1.0) < 0.5 ? -magnitude : magnitude;
    worst = std::max(worst, identities::dirac_inner_residual(x, variant));
  }
  return worst;
}

SuiteResult suite_dirac(const RunConfig& cfg, std::mt19937_64& rng) {
  SuiteResult r;
  r.samples = or_default(cfg.samples, std::size_t{1000});
  r.tolerance = or_default(cfg.tol, 1e-9);
  const auto seed = rng();
  std::mt19937_64 a(seed), b(seed), c(seed);
  r.max_residual = dirac_max(a, r.samples, identities::DiracVariant::inner);
  r.details = {{"variant", "inner"},
               {"literal_max_residual", dirac_max(b, r.samples, identities::DiracVariant::literal)},
               {"reflected_max_residual",
                dirac_max(c, r.samples, identities::DiracVariant::reflected)}};
  r.pass = r.max_residual <= r.tolerance;
  return r;
}

SuiteResult suite_torus_sub(const RunConfig& cfg, std::mt19937_64& rng) {
  SuiteResult r;
  const std::size_t max_terms = terms_or(cfg, 12);
  std::vector<double> thetas{kPi / 2, kPi};
  for (std::size_t k = 0; k < or_default(cfg.samples, std::size_t{20}); ++k) {
    thetas.push_back(uniform(rng, 0.01, 2.0 * kPi - 0.01));
  }
  r.samples = thetas.size();
  r.tolerance = or_default(cfg.tol, 1e-13);
  bool ok = true;
  bool monotone = true;
  for (double theta : thetas) {
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= max_terms; ++n) {
      const auto s = identities::torus_substitution_residual(theta, n);
      r.max_residual = std::max(r.max_residual, s.residual - s.tail_bound);
      if (s.residual > s.tail_bound + r.tolerance) ok = false;
      if (s.residual > previous + r.tolerance) monotone = false;
      previous = s.residual;
    }
  }
  r.details = {{"max_terms", max_terms},
               {"monotone_in_terms", monotone},
               {"target", "exp(-(1+e^{i theta})/(1-e^{i theta}))"},
               {"literal_target_residual_at_pi_over_2",
                identities::torus_substitution_residual(kPi / 2, max_terms,
                                                        identities::TorusTarget::literal)
                    .residual}};
  r.pass = ok && monotone;
  return r;
}

double psi_max_ratio(bool include_j0, int scales, std::size_t samples, double linear_slope) {
  double worst = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double x = -100.0 + 200.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
    if (std::abs(x) < 1e-3) continue;
    const double psi = multiscale::dyadic_phase(x, {scales, include_j0});
    worst = std::max(worst, std::abs(psi - linear_slope * x) / std::abs(x));
  }
  return worst;
}

SuiteResult suite_psi_bound(const RunConfig& cfg, std::mt19937_64&) {
  SuiteResult r;
  r.samples = or_default(cfg.samples, std::size_t{10000});
  r.tolerance = or_default(cfg.tol, 0.004 * kPi);
  r.max_residual = psi_max_ratio(cfg.include_j0, cfg.j_scales, r.samples, 2.0 * kPi);
  const double other = psi_max_ratio(!cfg.include_j0, cfg.j_scales, r.samples, 2.0 * kPi);
  bool increasing = true;
  double previous = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < 10000; ++k) {
    const double x = -50.0 + 100.0 * static_cast<double>(k) / 9999.0;
    const double psi = multiscale::dyadic_phase(x, {cfg.j_scales, cfg.include_j0});
    if (psi <= previous) increasing = false;
    previous = psi;
  }
  r.details = {{"measure", "max |psi(x) - 2 pi x| / |x|"},
               {"max_ratio_over_pi", r.max_residual / kPi},
               {"other_convention_max_ratio_over_pi", other / kPi},
               {"strictly_increasing", increasing}};
  r.pass = r.max_residual <= r.tolerance;
  return r;
}

double identity_deviation(const std::vector<std::vector<Complex>>& gram) {
  double worst = 0.0;
  for (std::size_t a = 0; a < gram.size(); ++a) {
    for (std::size_t b = 0; b < gram.size(); ++b) {
      worst = std::max(worst, std::abs(gram[a][b] - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

SuiteResult suite_wavelet_gram(const RunConfig& cfg, std::mt19937_64&) {
  SuiteResult r;
  const auto [n_lo, n_hi] = parse_range(cfg.scales, "--scales");
  const auto [j_lo, j_hi] = parse_range(cfg.shifts, "--shifts");
  const multiscale::DeltaSpec spec{cfg.j_scales, cfg.include_j0};
  std::vector<halfplane::Function> fs;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int j = j_lo; j <= j_hi; ++j) fs.push_back(multiscale::wavelet_function({n, j}, spec));
  }
  halfplane::QuadratureSpec quad;
  quad.nodes = or_default(cfg.m, std::size_t{16384});
  r.samples = fs.size();
  r.tolerance = or_default(cfg.tol, 1e-5);
  r.max_residual = identity_deviation(halfplane::hp_gram(fs, quad));
  r.details = {{"functions", fs.size()}, {"nodes", quad.nodes}, {"J", spec.scales}};
  r.pass = r.max_residual <= r.tolerance;
  return r;
}

SuiteResult suite_mt_gram(const RunConfig& cfg, std::mt19937_64& rng) {
  SuiteResult r;
  std::vector<Complex> points;
  mt::Domain domain = mt::Domain::disk;
  if (!cfg.input.empty()) {
    const auto sys = io::mt_system_from_json(io::read_json_file(cfg.input));
    points = sys.points();
    domain = sys.domain();
  } else {
    for (int k = 0; k < 32; ++k) {
      points.push_back(std::polar(0.95 * std::sqrt(uniform(rng, 0, 1)), uniform(rng, 0, 2 * kPi)));
    }
  }
  const mt::MTSystem sys(domain, points);
  r.samples = sys.size();
  std::vector<std::vector<Complex>> gram;
  if (domain == mt::Domain::disk) {
    const std::size_t n = or_default(cfg.n, torus::kDefaultGridSize);
    std::vector<GridFunction> basis;
    for (std::size_t k = 0; k < sys.size(); ++k) basis.push_back(mt::sample_disk(sys, k, n));
    gram.assign(sys.size(), std::vector<Complex>(sys.size()));
    for (std::size_t a = 0; a < sys.size(); ++a) {
      for (std::size_t b = 0; b < sys.size(); ++b) gram[a][b] = torus::inner_product(basis[a], basis[b]);
    }
    r.tolerance = or_default(cfg.tol, 1e-9);
    r.details = {{"grid_size", n}};
  } else {
    std::vector<halfplane::Function> fs;
    for (std::size_t k = 0; k < sys.size(); ++k) fs.push_back(mt::mt_halfplane_function(sys, k));
    halfplane::QuadratureSpec quad;
    quad.nodes = or_default(cfg.m, std::size_t{8192});
    gram = halfplane::hp_gram(fs, quad);
    r.tolerance = or_default(cfg.tol, 1e-8);
    r.details = {{"nodes", quad.nodes}};
  }
  r.details["system"] = io::mt_system_to_json(sys);
  r.max_residual = identity_deviation(gram);
  r.pass = r.max_residual <= r.tolerance;
  return r;
}

// ---------------------------------------------------------------- wavelet catalog

halfplane::Function catalog_function(const std::string& name, const Json& params) {
  const double norm = 1.0 / std::sqrt(kPi);
  if (name == "mt_atom") {
    const Complex a = params.contains("point") ? io::complex_from_json(params.at("point"), "point")
                                               : kI;
    const mt::MTSystem sys(mt::Domain::halfplane, {a});
    return mt::mt_halfplane_function(sys, 0);
  }
  if (name == "complete_unwinding") {
    const std::size_t terms = params.value("terms", std::size_t{6});
    return {[terms](Complex x) { return identities::complete_unwinding_partial(x, terms); }, 1.0,
            "complete_unwinding(" + std::to_string(terms) + ")"};
  }
  if (name == "rational") {
    const Complex pole = params.contains("pole") ? io::complex_from_json(params.at("pole"), "pole")
                                                 : Complex(0.0, -2.0);
    if (pole.imag() >= 0.0) throw DomainError("rational: the pole must lie in the lower half-plane");
    return {[pole, norm](Complex x) { return norm / (x - pole); }, 1.0, "rational"};
  }
  if (name == "wavelet") {
    const multiscale::WaveletIndex idx{params.value("n", 0), params.value("j", 0)};
    return multiscale::wavelet_function(idx);
  }
  throw io::ParseError("unknown function '" + name + "' (mt_atom, complete_unwinding, rational, wavelet)");
}

}  // namespace

Json config_to_json(const RunConfig& cfg) {
  return {{"command", cfg.command},   {"input", cfg.input},     {"out", cfg.out},
          {"strategy", cfg.strategy}, {"suite", cfg.suite},     {"function", cfg.function},
          {"n", cfg.n},               {"m", cfg.m},             {"j_scales", cfg.j_scales},
          {"terms", cfg.terms},       {"tol", cfg.tol},         {"seed", cfg.seed},
          {"check", cfg.check},       {"include_j0", cfg.include_j0},
          {"p", cfg.p_list},          {"scales", cfg.scales},   {"shifts", cfg.shifts},
          {"floor_eps", cfg.floor_eps}, {"samples", cfg.samples}};
}

int cmd_factor(const RunConfig& cfg) {
  const GridFunction f = read_function(cfg, or_default(cfg.n, torus::kDefaultGridSize));
  const auto pair = torus::inner_outer_factor(f, cfg.floor_eps);
  Json report = base_report(cfg);
  report["inner"] = {{"coeffs", io::analytic_coefficients(pair.inner, 1e-10)},
                     {"first_index", 0},
                     {"samples", io::complex_list(pair.inner.samples())}};
  report["outer"] = {{"coeffs", io::analytic_coefficients(pair.outer, 1e-10)},
                     {"first_index", 0},
                     {"samples", io::complex_list(pair.outer.samples())}};
  report["diagnostics"] = {{"modulus_deviation", pair.modulus_deviation},
                           {"reconstruction_error", pair.reconstruction_error},
                           {"inner_negative_spectrum", pair.inner_negative_spectrum}};
  int code = kOk;
  if (cfg.check) {
    const double tol = or_default(cfg.tol, 1e-8);
    double err = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      err = std::max(err, std::abs(pair.inner[k] * pair.outer[k] - f[k]));
    }
    err /= f.max_abs();
    const bool pass = err <= tol;
    report["check"] = {{"max_relative_error", err}, {"tolerance", tol}, {"pass", pass}};
    if (!pass) code = kCheckFailed;
  }
  emit(cfg, report);
  return code;
}

int cmd_unwind(const RunConfig& cfg) {
  const GridFunction f = read_function(cfg, or_default(cfg.n, torus::kDefaultGridSize));
  const Json strategy = strategy_json(cfg);
  const std::size_t max_terms = terms_or(cfg, unwind::kDefaultMaxTerms);
  const auto e = unwind::unwind(f, io::strategy_from_json(strategy), max_terms,
                                or_default(cfg.tol, unwind::kDefaultStopTol), cfg.floor_eps);
  const auto conv = unwind::convergence_report(e, f, cfg.p_list);
  Json terms = Json::array();
  for (std::size_t k = 0; k < e.terms.size(); ++k) {
    const double norm = torus::lp_norm(e.terms[k].g, 2.0);
    Json t = {{"index", k},
              {"energy", norm * norm},
              {"g_coefficients", io::analytic_coefficients(e.terms[k].g, 1e-10)}};
    if (e.terms[k].point) t["point"] = io::complex_to_json(*e.terms[k].point);
    terms.push_back(t);
  }
  const double residual_norm = torus::lp_norm(e.residual_inner * e.residual, 2.0);
  Json report = base_report(cfg);
  report["strategy"] = strategy;
  report["terms"] = terms;
  report["energies"] = Json::array();
  for (const auto& t : terms) report["energies"].push_back(t["energy"]);
  report["residual"] = {{"l2", residual_norm},
                        {"outer_coefficients", io::analytic_coefficients(e.residual, 1e-10)}};
  report["stopped"] = e.stopped;
  report["max_divisibility_defect"] = e.max_divisibility_defect;
  report["convergence"] = {{"p", conv.p_values},
                           {"errors", conv.errors},
                           {"l2_monotone", conv.l2_monotone},
                           {"reconstruction_error", conv.reconstruction_error}};
  emit(cfg, report);
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  static const std::map<std::string, std::function<SuiteResult(const RunConfig&, std::mt19937_64&)>>
      suites = {{"recur", suite_recur},           {"prounwinding", suite_prounwinding},
                {"alpha", suite_alpha},           {"dirac", suite_dirac},
                {"torus_sub", suite_torus_sub},   {"psi_bound", suite_psi_bound},
                {"wavelet_gram", suite_wavelet_gram}, {"mt_gram", suite_mt_gram}};
  const auto it = suites.find(cfg.suite);
  if (it == suites.end()) throw io::ParseError("unknown suite '" + cfg.suite + "'");
  std::mt19937_64 rng(cfg.seed);
  const SuiteResult r = it->second(cfg, rng);
  Json report = base_report(cfg);
  report["suite"] = cfg.suite;
  report["samples"] = r.samples;
  report["max_residual"] = r.max_residual;
  report["tolerance"] = r.tolerance;
  report["pass"] = r.pass;
  report["details"] = r.details;
  emit(cfg, report);
  log(r.pass ? Level::info : Level::warn,
      "suite " + cfg.suite + (r.pass ? " passed" : " failed"));
  return r.pass ? kOk : kCheckFailed;
}

int cmd_wavelet(const RunConfig& cfg) {
  std::string name = cfg.function.empty() ? "mt_atom" : cfg.function;
  Json params = Json::object();
  if (!cfg.input.empty()) {
    params = io::read_json_file(cfg.input);
    if (!params.is_object()) throw io::ParseError("wavelet input must be a JSON object");
    if (params.contains("function")) name = params.at("function").get<std::string>();
  }
  const auto f = catalog_function(name, params);
  const auto [n_lo, n_hi] = parse_range(cfg.scales, "--scales");
  const auto [j_lo, j_hi] = parse_range(cfg.shifts, "--shifts");
  const multiscale::DeltaSpec spec{cfg.j_scales, cfg.include_j0};
  halfplane::QuadratureSpec quad;
  quad.nodes = or_default(cfg.m, std::size_t{8192});
  quad.tolerance = cfg.tol;
  const auto coeffs = multiscale::wavelet_analyze(f, n_lo, n_hi, j_lo, j_hi, spec, quad);

  Json report = base_report(cfg);
  report.update(io::wavelet_coefficients_to_json(coeffs, spec, quad.nodes));
  double bessel = 0.0;
  for (const auto& c : coeffs.coeffs) bessel += std::norm(c.value);
  const double norm = halfplane::hp_norm(f, quad);
  report["function"] = {{"name", name}, {"label", f.label}, {"params", params}};
  report["bessel_sum"] = bessel;
  report["norm_squared"] = norm * norm;
  emit(cfg, report);
  if (!cfg.out.empty()) {
    const auto csv = std::filesystem::path(cfg.out).replace_extension(".csv").string();
    io::write_text_file(csv, io::wavelet_coefficients_to_csv(coeffs));
  }
  return kOk;
}

int dispatch(const RunConfig& cfg) {
  try {
    if (cfg.command == "factor") return cmd_factor(cfg);
    if (cfg.command == "unwind") return cmd_unwind(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "wavelet") return cmd_wavelet(cfg);
    log(Level::error, "unknown command '" + cfg.command + "'");
    return kInputError;
  } catch (const IllConditionedError& e) {
    log(Level::error, std::string("ill-conditioned: ") + e.what());
    return kIllConditioned;
  } catch (const ZeroFunctionError& e) {
    log(Level::error, std::string("zero function: ") + e.what());
    return kIllConditioned;
  } catch (const QuadratureError& e) {
    log(Level::error, e.what());
    return kCheckFailed;
  } catch (const ConsistencyError& e) {
    log(Level::error, e.what());
    return kCheckFailed;
  } catch (const nlohmann::json::exception& e) {
    log(Level::error, std::string("malformed input: ") + e.what());
    return kInputError;
  } catch (const Error& e) {
    log(Level::error, e.what());
    return kInputError;
  }
}

int run(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Phase unwinding, Malmquist-Takenaka and multiscale Blaschke tools"};
  app.add_option("command", cfg.command, "factor | unwind | verify | wavelet")
      ->required()
      ->check(CLI::IsMember({"factor", "unwind", "verify", "wavelet"}));
  app.add_option("--input", cfg.input, "input JSON file");
  app.add_option("--out", cfg.out, "output JSON file (stdout when omitted)");
  app.add_option("--n", cfg.n, "grid size N (power of two)");
  app.add_option("--m", cfg.m, "quadrature nodes M (power of two)");
  app.add_option("--j-scales", cfg.j_scales, "number of dyadic scales in Delta");
  app.add_option("--terms", cfg.terms, "maximum number of terms");
  app.add_option("--tol", cfg.tol, "tolerance (command specific)");
  app.add_option("--strategy", cfg.strategy, "unwinding strategy: JSON text or file");
  app.add_option("--suite", cfg.suite, "verification suite")
      ->check(CLI::IsMember({"recur", "prounwinding", "alpha", "dirac", "torus_sub", "psi_bound",
                             "wavelet_gram", "mt_gram"}));
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_flag("--check", cfg.check, "re-multiply the factorization and compare with the input");
  app.add_flag("--include-j0", cfg.include_j0, "include the j = 0 factor in Delta");
  app.add_option("--p", cfg.p_list, "L^p exponents for the convergence table");
  app.add_option("--scales", cfg.scales, "wavelet scale range lo:hi");
  app.add_option("--shifts", cfg.shifts, "wavelet shift range lo:hi");
  app.add_option("--floor-eps", cfg.floor_eps, "relative modulus floor in the factorization");
  app.add_option("--samples", cfg.samples, "number of random samples for verify suites");
  app.add_option("--function", cfg.function,
                 "wavelet input: mt_atom | complete_unwinding | rational | wavelet");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (cfg.command == "verify" && cfg.suite.empty()) {
    log(Level::error, "verify needs --suite");
    return kInputError;
  }
  return dispatch(cfg);
}

}  // namespace hardy::cli
