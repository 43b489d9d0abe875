#include "infoproj/cli/run.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "infoproj/cli/csv.hpp"
#include "infoproj/errors.hpp"
#include "infoproj/pca.hpp"
#include "infoproj/sic_index.hpp"
#include "infoproj/special_functions.hpp"

namespace infoproj::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string variant_name(SynthVariant v) {
  return v == SynthVariant::TwoScale ? "two-scale" : "outlier-pair";
}

ordered_json to_json(const Vector& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(v[k]);
  return arr;
}

ordered_json to_json(const SicValue& s) {
  return {{"total", s.total},
          {"data_term", s.data_term},
          {"resolution_term", s.resolution_term},
          {"constant_term", s.constant_term}};
}

ordered_json synth_json(const SynthSpec& spec) {
  return {{"variant", variant_name(spec.variant)}, {"seed", spec.seed},
          {"n_large", spec.n_large},               {"n_small", spec.n_small},
          {"d", spec.d},                           {"scale_factor", spec.scale_factor},
          {"scale_minority", spec.scale_minority}};
}

struct LoadedInput {
  DataMatrix data;
  std::vector<std::string> labels;
  ordered_json description;
};

LoadedInput load_input(const RunConfig& config) {
  if (config.input_path) {
    CsvTable table = load_csv(*config.input_path,
                              {config.has_header, config.label_last, config.center});
    ordered_json desc = {{"source", "csv"},
                         {"path", *config.input_path},
                         {"n", table.data.n()},
                         {"d", table.data.d()},
                         {"centered", table.data.centered()}};
    return {std::move(table.data), std::move(table.labels), std::move(desc)};
  }
  SynthData synth = generate(*config.synth);
  std::vector<std::string> labels;
  labels.reserve(synth.labels.size());
  for (int l : synth.labels) labels.push_back(std::to_string(l));
  ordered_json desc = {{"source", "synthetic"},
                       {"spec", synth_json(*config.synth)},
                       {"n", synth.x.n()},
                       {"d", synth.x.d()},
                       {"centered", synth.x.centered()}};
  return {std::move(synth.x), std::move(labels), std::move(desc)};
}

std::vector<double> resolve_deltas(const RunConfig& config, std::size_t r) {
  if (config.deltas.empty()) return std::vector<double>(r, 1.0);
  if (config.deltas.size() == 1) return std::vector<double>(r, config.deltas.front());
  if (config.deltas.size() != r) throw InvalidInput("--delta needs one value or one per axis");
  return config.deltas;
}

ordered_json sic_json(const DataMatrix& x, const OrthonormalBasis& basis, const RunConfig& config,
                      double rho) {
  const auto deltas = resolve_deltas(config, basis.r());
  SicParams params;
  params.sigma = config.sigma;
  params.rho = rho;
  params.nu = config.nu;
  params.c = config.c;
  params.deltas = deltas;
  params.validate();

  ordered_json out;
  ordered_json gauss = to_json(sic_gaussian_rd(x, basis, config.sigma, deltas));
  gauss["sigma"] = config.sigma;
  out["gaussian"] = gauss;
  if (rho > 0.0) {
    const double nu = params.resolve_nu(x.d());
    ordered_json t = to_json(sic_t_rd(x, basis, rho, nu, deltas));
    t["rho"] = rho;
    t["nu"] = nu;
    if (config.c) t["c"] = *config.c;
    out["t"] = t;
  } else {
    out["t"] = nullptr;  // normalization diverges at rho = 0
  }
  out["deltas"] = deltas;
  return out;
}

ordered_json component_json(const ComponentFit& fit) {
  return {{"direction", to_json(fit.direction)},
          {"objective", fit.objective},
          {"iterations", fit.iterations},
          {"converged", fit.converged},
          {"kkt_residual", fit.kkt_residual},
          {"backtracks", fit.backtracks},
          {"alpha", fit.final_alpha},
          {"restart_index", fit.restart_index},
          {"objective_trace", fit.objective_trace}};
}

ordered_json relax_json(const RelaxResult& relax) {
  return {{"objective", relax.objective},
          {"upper_bound", relax.report.upper_bound.value_or(relax.objective)},
          {"bound_label", relax.report.bound_label},
          {"certified_bound", relax.report.certified_bound.value_or(relax.objective)},
          {"duality_gap", relax.duality_gap},
          {"gradient_mapping_norm", relax.gradient_mapping_norm},
          {"iterations", relax.report.iterations},
          {"converged", relax.report.converged},
          {"basis_tie", relax.basis_tie},
          {"objective_trace", relax.objective_trace}};
}

std::string projection_csv(const DataMatrix& x, const Matrix& basis,
                           const std::vector<std::string>& labels) {
  std::vector<std::string> header;
  for (Eigen::Index j = 0; j < basis.cols(); ++j) header.push_back("p" + std::to_string(j + 1));
  if (!labels.empty()) header.emplace_back("label");
  std::ostringstream out;
  write_csv(out, x.values() * basis, header, labels);
  return out.str();
}

ordered_json options_json(const RunConfig& config) {
  ordered_json power = {{"alpha", config.power.alpha ? ordered_json(*config.power.alpha)
                                                     : ordered_json("auto")},
                        {"max_iter", config.power.max_iter},
                        {"tol", config.power.tol},
                        {"restarts", config.power.restarts}};
  ordered_json relax = {{"max_iter", config.relax.max_iter}, {"tol", config.relax.tol}};
  return {{"power", power}, {"relax", relax}};
}

RunOutcome execute_fit(const RunConfig& config) {
  LoadedInput input = load_input(config);
  const DataMatrix& x = input.data;
  if (!x.centered()) throw InvalidInput("fit requires centered data (omit --no-center)");
  if (config.r > x.d()) throw InvalidInput("--r exceeds the data dimension");
  const double scale = scale_measure(x);
  if (!(scale > 0.0)) throw InvalidInput("data matrix is all zero");
  const double rho = config.rho.resolve(scale);

  ordered_json report;
  report["schema"] = kSchemaVersion;
  report["command"] = "fit";
  report["method"] = method_name(config.method);
  report["input"] = input.description;
  report["scale"] = scale;
  report["rho"] = {{"policy", config.rho.relative ? "relative" : "absolute"},
                   {"setting", config.rho.value},
                   {"value", rho}};
  report["r"] = config.r;
  report["seed"] = config.power.seed;
  report["options"] = options_json(config);

  FitReport fit;
  std::optional<RelaxResult> relax;
  if (config.method == Method::Pca) {
    const auto pcs = top_components(x, config.r);
    fit.basis = pcs.basis.mat();
    DataMatrix current(x.values(), false);
    for (Eigen::Index j = 0; j < fit.basis.cols(); ++j) {
      ComponentFit c;
      c.direction = fit.basis.col(j);
      c.objective = tpca_objective(current, UnitVector(c.direction), rho);
      c.converged = true;
      fit.components.push_back(std::move(c));
      current = deflate(current, fit.basis.col(j));
    }
    report["eigenvalues"] = to_json(pcs.eigenvalues);
  } else if (config.method == Method::TpcaPower) {
    fit = fit_tpca_power(x, rho, config.r, config.power);
    if (config.with_bound) relax = solve_relaxation(x, rho, config.r, config.relax);
  } else {
    relax = solve_relaxation(x, rho, config.r, config.relax);
    fit = relax->report;
  }

  const OrthonormalBasis basis(fit.basis);
  ordered_json components = ordered_json::array();
  for (const auto& c : fit.components) components.push_back(component_json(c));
  report["components"] = components;
  Vector q = Vector::Zero(static_cast<Eigen::Index>(x.n()));
  for (Eigen::Index j = 0; j < fit.basis.cols(); ++j) q += project(x, fit.basis.col(j)).cwiseAbs2();
  double basis_objective = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) basis_objective += std::log(rho + q[i]);
  report["basis_objective"] = basis_objective;
  report["converged"] = fit.converged && (!relax || relax->report.converged);
  report["sic"] = sic_json(x, basis, config, rho);
  report["relaxation"] = relax ? relax_json(*relax) : ordered_json(nullptr);

  RunOutcome outcome;
  outcome.report_json = report.dump(2) + "\n";
  outcome.projection_csv = projection_csv(x, fit.basis, input.labels);
  outcome.exit_code = report["converged"].get<bool>() ? 0 : 2;
  return outcome;
}

RunOutcome execute_gen(const RunConfig& config) {
  const SynthSpec spec = config.synth.value_or(SynthSpec{});
  SynthData data = generate(spec);
  std::vector<std::string> header;
  for (std::size_t j = 0; j < data.x.d(); ++j) header.push_back("x" + std::to_string(j + 1));
  header.emplace_back("label");
  std::vector<std::string> labels;
  for (int l : data.labels) labels.push_back(std::to_string(l));
  std::ostringstream csv;
  write_csv(csv, data.x.values(), header, labels);

  ordered_json report = {{"schema", kSchemaVersion},
                         {"command", "gen"},
                         {"spec", synth_json(spec)},
                         {"n", data.x.n()},
                         {"d", data.x.d()}};
  RunOutcome outcome;
  outcome.data_csv = csv.str();
  outcome.report_json = report.dump(2) + "\n";
  return outcome;
}

RunOutcome execute_sic(const RunConfig& config) {
  LoadedInput input = load_input(config);
  const DataMatrix& x = input.data;
  if (config.direction.size() != x.d()) {
    throw InvalidInput("--w must have one entry per data column");
  }
  Vector raw(static_cast<Eigen::Index>(x.d()));
  for (std::size_t k = 0; k < x.d(); ++k) raw[static_cast<Eigen::Index>(k)] = config.direction[k];
  const UnitVector w = UnitVector::normalized(raw);
  const double scale = scale_measure(x);
  const double rho = config.rho.resolve(scale);

  ordered_json report;
  report["schema"] = kSchemaVersion;
  report["command"] = "sic";
  report["input"] = input.description;
  report["scale"] = scale;
  report["rho"] = {{"policy", config.rho.relative ? "relative" : "absolute"},
                   {"setting", config.rho.value},
                   {"value", rho}};
  report["direction"] = to_json(w.vec());
  report["tpca_objective"] = tpca_objective(x, w, rho);
  const double stretched = stretched_sic_objective(x, w, config.sigma);
  report["stretched_objective"] =
      std::isfinite(stretched) ? ordered_json(stretched) : ordered_json(nullptr);
  report["sic"] = sic_json(x, OrthonormalBasis::from_unit(w), config, rho);

  RunOutcome outcome;
  outcome.report_json = report.dump(2) + "\n";
  return outcome;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << contents;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Pca:
      return "pca";
    case Method::TpcaPower:
      return "tpca-power";
    case Method::TpcaRelax:
      return "tpca-relax";
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (command == Command::Gen) {
    if (synth) synth->validate();
    return;
  }
  if (input_path.has_value() == synth.has_value()) {
    throw InvalidInput("exactly one input source required: --input or a synthetic spec");
  }
  if (synth) synth->validate();
  if (!(rho.value >= 0.0) || !std::isfinite(rho.value)) throw InvalidInput("rho must be nonnegative");
  if (!(sigma > 0.0)) throw InvalidInput("sigma must be positive");
  if (nu && c) throw InvalidInput("give at most one of --nu and --c");
  if (nu && !(*nu > 0.0)) throw InvalidInput("nu must be positive");
  if (c && !(*c > 0.0)) throw InvalidInput("c must be positive");
  for (double delta : deltas) {
    if (!(delta > 0.0)) throw InvalidInput("deltas must be positive");
  }
  if (command == Command::Fit) {
    if (r < 1) throw InvalidInput("--r must be at least 1");
    if (method != Method::Pca) power.validate();
    if (method == Method::TpcaRelax || with_bound) {
      relax.validate();
      if (rho.value == 0.0) throw InvalidInput("the relaxation requires rho > 0");
    }
  }
}

RunOutcome execute(const RunConfig& config) {
  try {
    config.validate();
    switch (config.command) {
      case Command::Fit:
        return execute_fit(config);
      case Command::Gen:
        return execute_gen(config);
      case Command::Sic:
        return execute_sic(config);
    }
    throw InvalidInput("unknown command");
  } catch (const std::exception& e) {
    RunOutcome outcome;
    outcome.exit_code = 1;
    outcome.error = e.what();
    return outcome;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunOutcome outcome = execute(config);
  if (outcome.exit_code == 1) {
    err << "error: " << outcome.error << '\n';
    return 1;
  }
  try {
    if (config.command == Command::Gen) {
      if (config.out_data) {
        write_file(*config.out_data, outcome.data_csv);
      } else {
        out << outcome.data_csv;
      }
      if (config.out_report) write_file(*config.out_report, outcome.report_json);
      return outcome.exit_code;
    }
    if (config.out_report) {
      write_file(*config.out_report, outcome.report_json);
    } else {
      out << outcome.report_json;
    }
    if (config.out_proj && !outcome.projection_csv.empty()) {
      write_file(*config.out_proj, outcome.projection_csv);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (outcome.exit_code == 2) err << "warning: solver did not converge\n";
  return outcome.exit_code;
}

}  // namespace infoproj::cli
