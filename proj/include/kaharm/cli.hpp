#pragma once

// Command-line harness: run configuration, the four commands and the exit-code
// contract (0 pass, 1 invariant failure, 2 configuration error).

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kaharm/exp_monomial.hpp"
#include "kaharm/io.hpp"
#include "kaharm/rational.hpp"
#include "kaharm/root_system.hpp"

namespace kaharm::cli {

enum ExitCode : int { kPass = 0, kInvariantFailure = 1, kConfigError = 2 };

struct TransformRequest {
  enum class Kind { Fourier, InverseFourier, Semigroup };
  Kind kind = Kind::Fourier;
  std::complex<double> z{0.0, 0.0};  ///< semigroup parameter
  ExpMonomialQ input;
};

struct RunConfig {
  std::string root_system_label;  ///< preset name, or "inline"
  std::optional<MultiplicityFunction> k;
  Rational a{1};  ///< signed; the sign picks the branch of transform and basis-table
  std::vector<int> sectors{0};
  int truncation = 32;
  int nodes = 128;
  unsigned seed = 1;
  /// Output file names relative to the output directory.
  std::map<std::string, std::string> outputs;
  std::optional<TransformRequest> transform;
  std::vector<double> r_grid;
  int basis_l_max = 7;
  /// Also verify the same-sign reading of the H relation (known to fail).
  bool check_same_sign_h = false;

  const MultiplicityFunction& multiplicity() const { return *k; }
  int dimension() const { return k->dimension(); }
};

/// Parses and validates a configuration. Throws ConfigError / ParseError for
/// malformed input and BranchHypothesisViolated, naming the sector, when some
/// sector violates the lambda hypothesis.
RunConfig load_config(const Json& j);
RunConfig load_config_file(const std::filesystem::path& path);

/// 17 significant digits in scientific notation.
std::string format_double(double x);

struct VerifyResult {
  std::string report;
  bool passed = false;
};

VerifyResult verify_report(const RunConfig& config);
/// branch, m, l, eigenvalue (exact), eigenvalue (float)
std::string spectrum_csv(const RunConfig& config);
/// m, l, re, im before and after the requested transform.
std::pair<std::string, std::string> transform_csv(const RunConfig& config);
/// branch, m, l, r, f_value
std::string basis_table_csv(const RunConfig& config);

/// Full command line (argv[0] included). Never throws; returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kaharm::cli
