#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "infoproj/synth.hpp"
#include "infoproj/tpca_power.hpp"
#include "infoproj/tpca_relax.hpp"

namespace infoproj::cli {

enum class Command { Fit, Gen, Sic };
enum class Method { Pca, TpcaPower, TpcaRelax };

/// rho either as an absolute value or as factor * scale_measure(X).
struct RhoPolicy {
  bool relative = true;
  double value = 1e-5;

  double resolve(double scale) const { return relative ? value * scale : value; }
};

struct RunConfig {
  Command command = Command::Fit;

  // Input: exactly one of a CSV path or a synthetic spec.
  std::optional<std::string> input_path;
  std::optional<SynthSpec> synth;
  bool has_header = false;
  bool label_last = false;
  bool center = true;

  Method method = Method::TpcaPower;
  std::size_t r = 1;
  RhoPolicy rho;
  double sigma = 1.0;
  std::optional<double> nu;
  std::optional<double> c;
  std::vector<double> deltas;  // empty: 1 on every axis; one value: broadcast
  PowerOptions power;
  RelaxOptions relax;
  bool with_bound = false;  // also run the relaxation after the power method

  std::vector<double> direction;  // sic command

  std::optional<std::string> out_report;
  std::optional<std::string> out_proj;
  std::optional<std::string> out_data;  // gen command; stdout when unset

  void validate() const;
};

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 1 input error, 2 non-convergence
  std::string report_json;
  std::string projection_csv;
  std::string data_csv;
  std::string error;
};

/// Executes a command in memory; never touches the output paths.
RunOutcome execute(const RunConfig& config);

/// execute() plus writing artifacts to the configured paths (report JSON goes
/// to stdout when no report path is set). Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string method_name(Method m);

}  // namespace infoproj::cli
