#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "crvar/error.hpp"
#include "crvar/variation.hpp"

namespace crvar::app {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

struct SuiteConfig {
  int dimension = 1;
  int degree = 4;
  std::vector<std::string> suites{"all"};
  /// Monte-Carlo samples; 0 disables floating-point checks.
  long samples = 0;
  std::uint64_t seed = 20240611;
  std::string output;
};

/// Key-value text: one "key = value" per line, '#' starts a comment.
/// Keys: dimension, degree, suites (comma separated), samples, seed, output.
SuiteConfig parse_config(std::string_view text, SuiteConfig base = {});
SuiteConfig load_config(const std::string& path, SuiteConfig base = {});
/// Throws crvar::Error on an invalid configuration.
void validate(const SuiteConfig& cfg);
std::vector<std::string> known_suites();

/// Runs the selected suites. report["summary"]["pass"] is false iff an exact
/// comparison failed. The "timestamp" field is the only nondeterministic entry.
Json run_suite(const SuiteConfig& cfg);

/// Deformation file: "dimension n" then either "E <poly>" (n = 1), raw Geller
/// coefficients "c j k l m <poly>" of conj(Z_jk) (x) theta_lm, or ambient
/// matrix entries "m a b <poly>"; indices 1-based, '#' comments.
DeformationTensor parse_deformation(std::string_view text);
DeformationTensor load_deformation(const std::string& path);

class SymmetryError : public Error {
 public:
  SymmetryError(const std::string& what, GellerPair a, GellerPair b) : Error(what), a_(a), b_(b) {}
  GellerPair first() const { return a_; }
  GellerPair second() const { return b_; }

 private:
  GellerPair a_, b_;
};

struct AnalyzeOptions {
  bool oracle = false;
};
/// Mode table, embeddability, Hessian report and (n = 1, on request) the S^3 oracle.
/// Throws SymmetryError when the lowered form is not symmetric.
Json analyze_deformation(const DeformationTensor& e, const AnalyzeOptions& opt = {});

/// lambda_{p,q,n} table for p + q <= max_degree with kernel and frame checks.
Json spectrum(int n, int max_degree);
/// Convention ledger with the live-computed constants.
Json conventions(int n);

struct MonteCarloResult {
  std::string monomial;
  std::string exact;
  double estimate_re = 0, estimate_im = 0;
  double standard_error = 0;
  bool within = false;
};
/// Uniform samples on S^{2n+1} (normalized Gaussians) against exact integrals of
/// every monomial of degree <= max_degree.
std::vector<MonteCarloResult> monte_carlo_integrals(int n, int max_degree, long samples, std::uint64_t seed);

/// Writes the human summary of a verify report.
void print_summary(std::ostream& os, const Json& report);

}  // namespace crvar::app
