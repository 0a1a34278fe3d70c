#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "crvar/app.hpp"

using crvar::app::Json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

void write_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw crvar::Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

int cmd_verify(const std::string& config, const crvar::app::SuiteConfig& flags, const CLI::App& sub, bool json) {
  crvar::app::SuiteConfig cfg;
  if (!config.empty()) cfg = crvar::app::load_config(config);
  if (sub.count("--dimension")) cfg.dimension = flags.dimension;
  if (sub.count("--degree")) cfg.degree = flags.degree;
  if (sub.count("--suites")) cfg.suites = flags.suites;
  if (sub.count("--samples")) cfg.samples = flags.samples;
  if (sub.count("--seed")) cfg.seed = flags.seed;
  if (sub.count("--output")) cfg.output = flags.output;
  crvar::app::validate(cfg);
  Json report = crvar::app::run_suite(cfg);
  if (!cfg.output.empty()) write_json(report, cfg.output);
  if (json) std::cout << report.dump(2) << "\n";
  else crvar::app::print_summary(std::cout, report);
  return report["summary"]["pass"].get<bool>() ? 0 : kExitFailed;
}

int cmd_analyze(const std::string& file, bool oracle, const std::string& output) {
  auto e = crvar::app::load_deformation(file);
  Json report = crvar::app::analyze_deformation(e, {oracle});
  report["file"] = file;
  report["version"] = crvar::app::kVersion;
  if (!output.empty()) write_json(report, output);
  std::cout << report.dump(2) << "\n";
  return report["pass"].get<bool>() ? 0 : kExitFailed;
}

int cmd_spectrum(int n, int degree, bool json) {
  Json s = crvar::app::spectrum(n, degree);
  if (json) {
    std::cout << s.dump(2) << "\n";
  } else {
    std::cout << "lambda_{p,q," << n << "} = pq + " << n << "(p+q)/2\n";
    std::cout << "   p   q  lambda  2*lambda-n  spectral  frame  kernel\n";
    for (const auto& r : s["rows"]) {
      auto flag = [](const Json& b) { return b.get<bool>() ? "ok" : "FAIL"; };
      std::cout << std::setw(4) << r["p"].get<int>() << std::setw(4) << r["q"].get<int>() << std::setw(8)
                << r["lambda"].get<std::string>() << std::setw(12) << r["gap"].get<std::string>() << std::setw(10)
                << flag(r["spectral"]) << std::setw(7) << flag(r["frame"]) << std::setw(8) << flag(r["kernel"])
                << "\n";
    }
    std::cout << (s["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  return s["pass"].get<bool>() ? 0 : kExitFailed;
}

int cmd_conventions(int n, bool json) {
  Json c = crvar::app::conventions(n);
  if (json) {
    std::cout << c.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : c.items())
      std::cout << std::left << std::setw(26) << k << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pseudohermitian calculus on odd spheres and variation checks for the Webster functional"};
  app.set_version_flag("--version", crvar::app::kVersion);
  app.require_subcommand(1);

  crvar::app::SuiteConfig flags;
  std::string config;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("-c,--config", config, "key = value configuration file")->check(CLI::ExistingFile);
  verify->add_option("-n,--dimension", flags.dimension, "sphere S^{2n+1}");
  verify->add_option("-d,--degree", flags.degree, "maximal pool degree");
  verify->add_option("-s,--suites", flags.suites, "ring, spectral, frames, variation, oracle3 or all")->delimiter(',');
  verify->add_option("--samples", flags.samples, "Monte-Carlo samples (0 disables)");
  verify->add_option("--seed", flags.seed, "Monte-Carlo seed");
  verify->add_option("-o,--output", flags.output, "report path (JSON)");
  verify->add_flag("--json", verify_json, "print the full report instead of the summary");

  std::string file, analyze_output;
  bool oracle = false;
  auto* analyze = app.add_subcommand("analyze", "Mode table, embeddability and Hessian of a deformation file");
  analyze->add_option("file", file, "deformation file")->required()->check(CLI::ExistingFile);
  analyze->add_flag("--oracle", oracle, "add the S^3 oracle cross-check (n = 1)");
  analyze->add_option("-o,--output", analyze_output, "report path (JSON)");

  int spec_n = 1, spec_degree = 4;
  bool spec_json = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Sublaplacian eigenvalue table with kernel checks");
  spectrum_cmd->add_option("-n,--dimension", spec_n, "sphere S^{2n+1}");
  spectrum_cmd->add_option("-d,--degree", spec_degree, "maximal p + q");
  spectrum_cmd->add_flag("--json", spec_json, "JSON output");

  int conv_n = 1;
  bool conv_json = false;
  auto* conv = app.add_subcommand("conventions", "Print the calibration ledger");
  conv->add_option("-n,--dimension", conv_n, "sphere S^{2n+1}");
  conv->add_flag("--json", conv_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(config, flags, *verify, verify_json);
    if (*analyze) return cmd_analyze(file, oracle, analyze_output);
    if (*spectrum_cmd) return cmd_spectrum(spec_n, spec_degree, spec_json);
    if (*conv) return cmd_conventions(conv_n, conv_json);
  } catch (const crvar::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const crvar::app::SymmetryError& e) {
    std::cerr << "symmetry error: " << e.what() << "\n";
    return kExitInput;
  } catch (const crvar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
