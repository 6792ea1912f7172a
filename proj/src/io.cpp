#include "hardy/io.hpp"

#include <fstream>
#include <sstream>

namespace hardy::io {
namespace {

const Json& require(const Json& j, const std::string& key, const std::string& context) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError("missing field '" + key + "' in " + context);
  }
  return j.at(key);
}

double number(const Json& j, const std::string& field) {
  if (!j.is_number()) throw ParseError("field '" + field + "' must be a number");
  return j.get<double>();
}

std::vector<Complex> optional_points(const Json& j, const std::string& key,
                                     const std::string& context) {
  return complex_list_from_json(require(j, key, context), context + "." + key);
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], field), number(j[1], field)};
  if (j.is_object() && j.contains("re")) {
    return {number(j.at("re"), field + ".re"),
            j.contains("im") ? number(j.at("im"), field + ".im") : 0.0};
  }
  throw ParseError("field '" + field + "' is not a complex number");
}

Json complex_list(std::span<const Complex> values) {
  Json out = Json::array();
  for (const Complex& v : values) out.push_back(complex_to_json(v));
  return out;
}

std::vector<Complex> complex_list_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(complex_from_json(j[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

torus::GridFunction grid_function_from_json(const Json& j, std::size_t grid_size) {
  if (!j.is_object()) throw ParseError("function input must be a JSON object");
  if (j.contains("samples")) {
    return torus::GridFunction(complex_list_from_json(j.at("samples"), "samples"));
  }
  for (const char* key : {"coefficients", "coeffs"}) {
    if (!j.contains(key)) continue;
    const auto coeffs = complex_list_from_json(j.at(key), key);
    const int first = j.contains("first_index") ? j.at("first_index").get<int>() : 0;
    const std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>() : grid_size;
    return torus::GridFunction::from_coefficients(coeffs, first, n);
  }
  throw ParseError("function input needs a 'samples' or 'coeffs' field");
}

Json grid_function_to_json(const torus::GridFunction& f) {
  return {{"n", f.size()}, {"samples", complex_list(f.samples())}};
}

Json analytic_coefficients(const torus::GridFunction& f, double cutoff) {
  auto c = f.coefficients();
  c.resize(f.size() / 2);
  std::size_t keep = c.size();
  while (keep > 1 && std::abs(c[keep - 1]) < cutoff) --keep;
  c.resize(keep);
  for (auto& v : c) {
    // Round-off noise reads better as exact zeros.
    if (std::abs(v.real()) < cutoff) v.real(0.0);
    if (std::abs(v.imag()) < cutoff) v.imag(0.0);
  }
  return complex_list(c);
}

unwind::Strategy strategy_from_json(const Json& j) {
  const std::string ctx = "strategy";
  const Json& kind_json = require(j, "kind", ctx);
  if (!kind_json.is_string()) throw ParseError("field 'strategy.kind' must be a string");
  const auto kind = kind_json.get<std::string>();
  if (kind == "fixed_inner") {
    unwind::FixedInner s;
    const Json& inners = require(j, "inners", ctx);
    if (!inners.is_array()) throw ParseError("field 'strategy.inners' must be an array");
    for (std::size_t k = 0; k < inners.size(); ++k) {
      const std::string field = "strategy.inners[" + std::to_string(k) + "]";
      s.inners.emplace_back(blaschke::DiskBlaschke(optional_points(inners[k], "zeros", field)));
    }
    return s;
  }
  if (kind == "moebius") return unwind::Moebius{optional_points(j, "points", ctx)};
  if (kind == "constant_subtract") return unwind::ConstantSubtract{optional_points(j, "points", ctx)};
  if (kind == "greedy_afd") {
    if (j.contains("candidates")) {
      return unwind::GreedyAfd{complex_list_from_json(j.at("candidates"), "strategy.candidates")};
    }
    return unwind::GreedyAfd::polar_grid(j.value("rings", 16), j.value("angles", 64),
                                         j.value("r_max", 0.98));
  }
  throw ParseError("unknown strategy kind '" + kind + "'");
}

Json mt_system_to_json(const mt::MTSystem& sys) {
  return {{"domain", sys.domain() == mt::Domain::disk ? "disk" : "halfplane"},
          {"points", complex_list(sys.points())},
          {"divergence_indicator", sys.divergence_indicator()}};
}

mt::MTSystem mt_system_from_json(const Json& j) {
  const std::string domain = j.value("domain", std::string("disk"));
  if (domain != "disk" && domain != "halfplane") {
    throw ParseError("field 'system.domain' must be 'disk' or 'halfplane'");
  }
  return mt::MTSystem(domain == "disk" ? mt::Domain::disk : mt::Domain::halfplane,
                      optional_points(j, "points", "system"));
}

Json mt_coefficients_to_json(const mt::MTSystem& sys, const mt::MTCoefficients& c) {
  return {{"schema_version", kSchemaVersion},
          {"system", mt_system_to_json(sys)},
          {"coeffs", complex_list(c.values)},
          {"residuals", c.residual_norms}};
}

Json wavelet_coefficients_to_json(const multiscale::WaveletCoefficients& c,
                                  const multiscale::DeltaSpec& spec, std::size_t nodes) {
  Json coeffs = Json::array();
  for (const auto& entry : c.coeffs) {
    coeffs.push_back({{"n", entry.index.n},
                      {"j", entry.index.j},
                      {"re", entry.value.real()},
                      {"im", entry.value.imag()}});
  }
  Json residuals = Json::array();
  for (const auto& r : c.residuals) {
    residuals.push_back({{"prefix", {r.prefix.n, r.prefix.j}}, {"l2", r.l2}});
  }
  return {{"spec", {{"J", spec.scales}, {"include_j0", spec.include_j0}, {"M", nodes}}},
          {"coeffs", coeffs},
          {"residuals", residuals}};
}

std::string wavelet_coefficients_to_csv(const multiscale::WaveletCoefficients& c) {
  std::ostringstream out;
  out.precision(17);
  out << "n,j,re,im,residual\n";
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    const auto& e = c.coeffs[k];
    out << e.index.n << ',' << e.index.j << ',' << e.value.real() << ',' << e.value.imag() << ','
        << c.residuals[k].l2 << '\n';
  }
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ParseError("failed writing '" + path + "'");
}

}  // namespace hardy::io
