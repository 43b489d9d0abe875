// infoproj: score and find informative linear projections of a CSV dataset.
//
//   infoproj fit --input data.csv --method tpca-power --r 2 --out-report fit.json --out-proj proj.csv
//   infoproj gen --variant outlier-pair --seed 7 --out data.csv
//   infoproj sic --input data.csv --w 1,0 --rho 1

#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "infoproj/cli/run.hpp"

namespace {

using infoproj::SynthSpec;
using infoproj::SynthVariant;
using infoproj::cli::Command;
using infoproj::cli::Method;
using infoproj::cli::RunConfig;

struct SynthFlags {
  std::string variant;
  std::uint64_t seed = 0;
  std::optional<std::size_t> n_large;
  std::optional<std::size_t> n_small;
  std::optional<std::size_t> d;
  std::optional<double> scale_factor;
  bool scale_majority = false;

  SynthSpec build() const {
    SynthSpec spec = variant == "outlier-pair" ? SynthSpec::outlier_pair_defaults(seed)
                                               : SynthSpec::two_scale_defaults(seed);
    if (n_large) spec.n_large = *n_large;
    if (n_small) spec.n_small = *n_small;
    if (d) spec.d = *d;
    if (scale_factor) spec.scale_factor = *scale_factor;
    spec.scale_minority = !scale_majority;
    return spec;
  }
};

void add_synth_flags(CLI::App* cmd, SynthFlags& flags, bool required) {
  auto* variant = cmd->add_option("--variant", flags.variant, "Synthetic design")
                      ->check(CLI::IsMember({"two-scale", "outlier-pair"}));
  if (required) variant->required();
  cmd->add_option("--n-large", flags.n_large, "Size of the first population");
  cmd->add_option("--n-small", flags.n_small, "Size of the second population");
  cmd->add_option("--d", flags.d, "Dimension (two-scale only)");
  cmd->add_option("--scale-factor", flags.scale_factor, "Covariance multiplier (two-scale)");
  cmd->add_flag("--scale-majority", flags.scale_majority,
                "Scale the first population instead of the second (two-scale)");
}

void add_input_flags(CLI::App* cmd, RunConfig& config, std::string& input) {
  cmd->add_option("--input", input, "CSV file, one point per row");
  cmd->add_flag("--header", config.has_header, "First line is a header");
  cmd->add_flag("--label-last", config.label_last, "Last column is a label, not a coordinate");
  cmd->add_flag("--no-center{false}", config.center, "Do not subtract column means");
}

void add_prior_flags(CLI::App* cmd, RunConfig& config, std::optional<double>& rho,
                     std::optional<double>& rho_rel) {
  auto* abs = cmd->add_option("--rho", rho, "Absolute t-prior scale");
  auto* rel = cmd->add_option("--rho-rel", rho_rel, "rho as a factor of the data scale (default 1e-5)");
  abs->excludes(rel);
  cmd->add_option("--sigma", config.sigma, "Gaussian prior scale for SIC reports")->capture_default_str();
  auto* nu = cmd->add_option("--nu", config.nu, "t-prior degrees of freedom (default 1)");
  auto* c = cmd->add_option("--c", config.c, "Expected mean log(1 + |x|^2/rho); sets nu");
  nu->excludes(c);
  cmd->add_option("--delta", config.deltas, "Plot resolution, one value or one per axis")
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subjective-information projection pursuit: PCA and t-PCA"};
  app.require_subcommand(1);

  RunConfig config;
  std::string input;
  std::optional<double> rho;
  std::optional<double> rho_rel;
  SynthFlags synth;
  std::string method = "tpca-power";
  std::string out_report, out_proj, out_data;

  auto* fit = app.add_subcommand("fit", "Find the most informative projection(s)");
  add_input_flags(fit, config, input);
  add_synth_flags(fit, synth, false);
  fit->add_option("--seed", synth.seed, "Seed for synthetic input and random restarts");
  fit->add_option("--method", method, "pca | tpca-power | tpca-relax")
      ->check(CLI::IsMember({"pca", "tpca-power", "tpca-relax"}))
      ->capture_default_str();
  fit->add_option("--r", config.r, "Number of directions")->capture_default_str();
  add_prior_flags(fit, config, rho, rho_rel);
  std::optional<double> alpha;
  fit->add_option("--alpha", alpha, "Power-method step size (default: automatic)");
  fit->add_option("--tol", config.power.tol, "Convergence tolerance on the step")->capture_default_str();
  fit->add_option("--max-iter", config.power.max_iter, "Iteration cap")->capture_default_str();
  fit->add_option("--restarts", config.power.restarts, "Extra random starts")->capture_default_str();
  fit->add_flag("--bound", config.with_bound, "Also solve the relaxation for an upper bound");
  fit->add_option("--out-report", out_report, "JSON report path (default stdout)");
  fit->add_option("--out-proj", out_proj, "Projected coordinates CSV path");

  auto* gen = app.add_subcommand("gen", "Generate a synthetic dataset");
  add_synth_flags(gen, synth, true);
  gen->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
  gen->add_option("--out", out_data, "CSV path (default stdout)");
  gen->add_option("--out-report", out_report, "JSON description path");

  auto* sic = app.add_subcommand("sic", "Score one direction");
  add_input_flags(sic, config, input);
  add_synth_flags(sic, synth, false);
  sic->add_option("--seed", synth.seed, "Seed for synthetic input");
  add_prior_flags(sic, config, rho, rho_rel);
  sic->add_option("--w", config.direction, "Direction, comma-separated (normalized)")
      ->delimiter(',')
      ->required();
  sic->add_option("--out-report", out_report, "JSON report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*gen) {
    config.command = Command::Gen;
  } else if (*fit) {
    config.command = Command::Fit;
  } else {
    config.command = Command::Sic;
  }

  if (!input.empty()) config.input_path = input;
  if (!synth.variant.empty()) config.synth = synth.build();
  config.power.seed = synth.seed;
  config.power.alpha = alpha;
  static const std::map<std::string, Method> methods = {
      {"pca", Method::Pca}, {"tpca-power", Method::TpcaPower}, {"tpca-relax", Method::TpcaRelax}};
  config.method = methods.at(method);
  if (rho) {
    config.rho = {false, *rho};
  } else if (rho_rel) {
    config.rho = {true, *rho_rel};
  }
  if (!out_report.empty()) config.out_report = out_report;
  if (!out_proj.empty()) config.out_proj = out_proj;
  if (!out_data.empty()) config.out_data = out_data;

  return infoproj::cli::run(config, std::cout, std::cerr);
}
