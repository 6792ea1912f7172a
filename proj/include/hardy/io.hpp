#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/errors.hpp"
#include "hardy/mtbasis.hpp"
#include "hardy/multiscale.hpp"
#include "hardy/torus.hpp"
#include "hardy/unwind.hpp"

namespace hardy::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or incomplete JSON input; the message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

Json complex_to_json(Complex z);
/// Accepts [re, im], a bare number, or {"re": .., "im": ..}.
Complex complex_from_json(const Json& j, const std::string& field);
Json complex_list(std::span<const Complex> values);
std::vector<Complex> complex_list_from_json(const Json& j, const std::string& field);

/// {"samples": [[re, im], ...]} or {"coeffs": [...], "first_index": k, "n": N}
/// ("coefficients" is accepted as a synonym).
/// `grid_size` is used for coefficient input without an explicit "n".
torus::GridFunction grid_function_from_json(const Json& j, std::size_t grid_size);
Json grid_function_to_json(const torus::GridFunction& f);
/// Fourier coefficients with indices 0..N/2-1, trailing entries below `cutoff` dropped.
Json analytic_coefficients(const torus::GridFunction& f, double cutoff = 1e-12);

/// Strategy JSON: {"kind": "fixed_inner" | "moebius" | "greedy_afd" | "constant_subtract", ...}.
///   fixed_inner: "inners": [{"zeros": [...]}, ...]
///   moebius / constant_subtract: "points": [...]
///   greedy_afd: "candidates": [...] or "rings", "angles", "r_max"
unwind::Strategy strategy_from_json(const Json& j);

Json mt_system_to_json(const mt::MTSystem& sys);
mt::MTSystem mt_system_from_json(const Json& j);
Json mt_coefficients_to_json(const mt::MTSystem& sys, const mt::MTCoefficients& c);

Json wavelet_coefficients_to_json(const multiscale::WaveletCoefficients& c,
                                  const multiscale::DeltaSpec& spec, std::size_t nodes);
/// n,j,re,im,residual rows.
std::string wavelet_coefficients_to_csv(const multiscale::WaveletCoefficients& c);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hardy::io
