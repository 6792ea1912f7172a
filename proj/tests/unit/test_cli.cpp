#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "hardy/io.hpp"
#include "helpers.hpp"

using namespace hardy;
using cli::RunConfig;
using io::Json;

namespace {

std::string tmp_path(const std::string& name) {
  const char* dir = std::getenv("HARDY_TEST_TMP");
  const auto base = std::filesystem::path(dir ? dir : std::filesystem::temp_directory_path().string()) /
                    "cli_test";
  std::filesystem::create_directories(base);
  return (base / name).string();
}

std::string write_json(const std::string& name, const Json& j) {
  const auto path = tmp_path(name);
  io::write_text_file(path, j.dump());
  return path;
}

RunConfig config(const std::string& command, const std::string& input, const std::string& out) {
  RunConfig cfg;
  cfg.command = command;
  cfg.input = input;
  cfg.out = out;
  return cfg;
}

}  // namespace

TEST_CASE("factor") {
  auto cfg = config("factor", write_json("factor_in.json", {{"coeffs", {0, 2, 1}}}), tmp_path("factor.json"));
  cfg.n = 64;
  cfg.check = true;
  CHECK(cli::dispatch(cfg) == cli::kOk);
  const auto report = io::read_json_file(cfg.out);
  CHECK(report.at("schema_version") == io::kSchemaVersion);
  CHECK(report.at("config").at("n") == 64);
  const auto inner = io::complex_list_from_json(report.at("inner").at("coeffs"), "inner");
  const auto outer = io::complex_list_from_json(report.at("outer").at("coeffs"), "outer");
  REQUIRE(inner.size() == 2);
  REQUIRE(outer.size() == 2);
  test::check_close(inner[0], 0.0, 1e-14);
  test::check_close(inner[1], 1.0, 1e-14);
  test::check_close(outer[0], 2.0, 1e-14);
  test::check_close(outer[1], 1.0, 1e-14);
  CHECK(report.at("check").at("pass") == true);
}

TEST_CASE("exit codes for bad inputs") {
  auto cfg = config("factor", write_json("zero.json", {{"coeffs", {0}}}), tmp_path("zero_out.json"));
  cfg.n = 64;
  CHECK(cli::dispatch(cfg) == cli::kIllConditioned);

  const auto bad = tmp_path("bad.json");
  io::write_text_file(bad, "{not json");
  CHECK(cli::dispatch(config("factor", bad, tmp_path("bad_out.json"))) == cli::kInputError);
  CHECK(cli::dispatch(config("factor", "", "")) == cli::kInputError);
  CHECK(cli::dispatch(config("transmogrify", "", "")) == cli::kInputError);

  auto verify = config("verify", "", tmp_path("unknown_suite.json"));
  verify.suite = "nope";
  CHECK(cli::dispatch(verify) == cli::kInputError);
}

TEST_CASE("unwind") {
  auto cfg = config("unwind", write_json("unwind_in.json", {{"coeffs", {0, 1, 1}}}), tmp_path("unwind.json"));
  cfg.n = 512;
  cfg.p_list = {2.0, 4.0};
  CHECK(cli::dispatch(cfg) == cli::kOk);
  auto report = io::read_json_file(cfg.out);
  REQUIRE(report.at("energies").size() == 3);
  CHECK(std::abs(report.at("energies")[1].get<double>() - 1.0) < 1e-12);
  CHECK(std::abs(report.at("convergence").at("errors")[0][0].get<double>() - std::sqrt(2.0)) < 1e-12);
  CHECK(report.at("stopped") == true);

  cfg.terms = 0;
  CHECK(cli::dispatch(cfg) == cli::kOk);
  report = io::read_json_file(cfg.out);
  CHECK(report.at("energies").empty());

  cfg.terms = -1;
  cfg.strategy = R"({"kind": "moebius", "points": [[0.5, 0]]})";
  CHECK(cli::dispatch(cfg) == cli::kOk);
  report = io::read_json_file(cfg.out);
  CHECK(report.at("terms")[0].at("point") == Json::parse("[0.5, 0.0]"));

  cfg.strategy = "{oops";
  CHECK(cli::dispatch(cfg) == cli::kInputError);
  cfg.strategy = R"({"kind": "moebius", "points": [[2, 0]]})";
  CHECK(cli::dispatch(cfg) == cli::kInputError);
}

TEST_CASE("verify suites report pass and fail through the exit code") {
  for (const std::string suite : {"recur", "prounwinding", "alpha", "torus_sub", "dirac", "mt_gram"}) {
    auto cfg = config("verify", "", tmp_path("verify_" + suite + ".json"));
    cfg.suite = suite;
    CAPTURE(suite);
    CHECK(cli::dispatch(cfg) == cli::kOk);
    const auto report = io::read_json_file(cfg.out);
    CHECK(report.at("pass") == true);
    CHECK(report.at("max_residual").get<double>() <= report.at("tolerance").get<double>());
  }
  auto strict = config("verify", "", tmp_path("verify_strict.json"));
  strict.suite = "recur";
  strict.tol = 1e-30;
  CHECK(cli::dispatch(strict) == cli::kCheckFailed);
}

TEST_CASE("wavelet analysis writes JSON and CSV") {
  auto cfg = config("wavelet", write_json("wavelet_in.json", {{"function", "mt_atom"}, {"point", {0, 1}}}),
                    tmp_path("wavelet.json"));
  cfg.scales = "0:0";
  cfg.shifts = "-1:1";
  cfg.m = 4096;
  CHECK(cli::dispatch(cfg) == cli::kOk);
  const auto report = io::read_json_file(cfg.out);
  CHECK(report.at("coeffs").size() == 3);
  CHECK(report.at("bessel_sum").get<double>() <= report.at("norm_squared").get<double>() + 1e-8);
  CHECK(std::filesystem::exists(tmp_path("wavelet.csv")));

  cfg.scales = "a:b";
  CHECK(cli::dispatch(cfg) == cli::kInputError);
  cfg.scales = "0:0";
  cfg.function = "";
  cfg.input = write_json("wavelet_bad.json", {{"function", "sawtooth"}});
  CHECK(cli::dispatch(cfg) == cli::kInputError);
}

TEST_CASE("command line parsing") {
  const char* argv[] = {"hardy", "verify", "--suite", "recur", "--samples", "50",
                        "--out", nullptr};
  const auto out = tmp_path("argv.json");
  argv[7] = out.c_str();
  CHECK(cli::run(8, const_cast<char**>(argv)) == cli::kOk);
  CHECK(io::read_json_file(out).at("config").at("samples") == 50);

  const char* missing[] = {"hardy", "verify"};
  CHECK(cli::run(2, const_cast<char**>(missing)) == cli::kInputError);
  const char* unknown[] = {"hardy", "explode"};
  CHECK(cli::run(2, const_cast<char**>(unknown)) == cli::kInputError);
}
