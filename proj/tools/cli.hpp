#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hardy::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kIllConditioned = 2,
  kCheckFailed = 3,
};

/// Resolved parameters of one invocation. Zero sizes and tolerances mean
/// "use the command's default"; the resolved values are echoed in every report.
struct RunConfig {
  std::string command;
  std::string input;
  std::string out;
  std::string strategy;
  std::string suite;
  std::string function;
  std::size_t n = 0;
  std::size_t m = 0;
  int j_scales = 40;
  /// Negative means the command default.
  int terms = -1;
  double tol = 0.0;
  std::uint64_t seed = 1;
  bool check = false;
  bool include_j0 = false;
  std::vector<double> p_list{2.0};
  std::string scales = "-1:1";
  std::string shifts = "-4:4";
  double floor_eps = 1e-12;
  std::size_t samples = 0;
};

nlohmann::json config_to_json(const RunConfig& cfg);

int cmd_factor(const RunConfig& cfg);
int cmd_unwind(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_wavelet(const RunConfig& cfg);

/// Runs cfg.command, mapping library errors to exit codes and messages on stderr.
int dispatch(const RunConfig& cfg);

/// Full command line entry point.
int run(int argc, char** argv);

}  // namespace hardy::cli
