// Copyright 2026 The featpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "featpriv_cli/commands.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "featpriv/error.h"
#include "featpriv_cli/config.h"

namespace featpriv::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Larger arrays report the closed form only.
constexpr long long kMaxSimulatedAntennas = 4096;
constexpr int kTransferDraws = 200;
constexpr long kChainInstances = 1000;

std::vector<std::string> SplitColumns(const std::string& header) {
  std::vector<std::string> out;
  std::stringstream ss(header);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

double TransferOrNaN(double mse, double c, const ExperimentConfig& cfg) {
  try {
    return FeatureTransferBound(mse, c, cfg.d, cfg.r, cfg.transfer_t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRegime) throw;
    return kNaN;
  }
}

Table CalibrateTable(const ExperimentConfig& cfg) {
  const NoiseCalibration cal =
      Calibrate(cfg.Budget(), cfg.r, cfg.d, cfg.b, cfg.clip_norm);
  Table t{{"epsilon", "delta", "r", "d", "b", "C_f", "c_w", "norm_bound",
           "sensitivity", "sigma2", "sigma2_gaussian", "d_z"},
          {}};
  t.AddRow({cfg.epsilon, cfg.delta, static_cast<long long>(cfg.r),
            static_cast<long long>(cfg.d), cfg.b, cfg.clip_norm, cal.c_w,
            cal.norm_bound, cal.sensitivity, cal.sigma2,
            SigmaFromSensitivity(cal.sensitivity, cfg.Budget()), cal.d_z});
  return t;
}

Table BoundTable(const ExperimentConfig& cfg, MseSource source) {
  const Experiment exp = PrepareExperiment(cfg);
  double p0 = 1.0 - cfg.p_flip;
  double mse = exp.server_bound.total;
  if (source == MseSource::kEmpirical) {
    const TrialStats stats = RunTrials(exp);
    mse = stats[Metric::kServerFMse].mean;
    if (exp.task) p0 = stats[Metric::kCleanAccuracy].mean;
  }
  const AccuracyBound acc = AccuracyLowerBound(p0, mse, cfg.Margin());
  const double c = cfg.transfer_c.value_or(DefaultTransferConstant(cfg.b));
  Table t{{"sigma2", "c_w", "d_z", "nu2", "bound_adv", "gamma_star",
           "approx_term", "privacy_term", "channel_term", "bound_server", "p0",
           "margin", "mse_source", "mse", "acc_bound", "transfer_c",
           "transfer_bound"},
          {}};
  t.AddRow({exp.sigma2, exp.calibration.c_w, exp.calibration.d_z, exp.nu2,
            exp.minimax.bound, exp.minimax.gamma_star,
            exp.server_bound.approx_term, exp.server_bound.privacy_term,
            exp.server_bound.channel_term, exp.server_bound.total, p0,
            acc.margin,
            std::string(source == MseSource::kConservative ? "conservative"
                                                           : "empirical"),
            mse, acc.lower, c, TransferOrNaN(exp.minimax.bound, c, cfg)});
  return t;
}

Table SimulateTable(const ExperimentConfig& cfg) {
  const TrialStats stats = RunTrials(cfg);
  Table t{{"metric", "n", "mean", "variance", "ci95_low", "ci95_high"}, {}};
  for (int m = 0; m < kMetricCount; ++m) {
    const MetricSummary& s = stats.metrics[m];
    t.AddRow({std::string(MetricName(static_cast<Metric>(m))),
              static_cast<long long>(s.n), s.mean, s.variance, s.ci95_low,
              s.ci95_high});
  }
  return t;
}

Table SweepTable(const ExperimentConfig& cfg, const Invocation& inv) {
  const SweepAxis axis = ParseSweepAxis(inv.axis);
  const std::vector<double> values =
      inv.values.empty() ? DefaultValues(axis) : inv.values;
  const SweepResult result = Sweep(cfg, axis, values, inv.mse_source);
  Table t{SplitColumns(kSweepHeader), {}};
  for (const SweepRow& row : result.rows) {
    t.AddRow({row.axis_value, row.sigma2, row.c_w, row.d_z, row.nu2,
              row.bound_adv, row.gamma_star, row.saddle.mean,
              row.trials[Metric::kServerFMse].mean, row.bound_server,
              row.trials[Metric::kAccuracy].mean, row.accuracy.lower,
              row.saddle.HalfWidth()});
  }
  return t;
}

Table DimensionTable(const ExperimentConfig& cfg) {
  const NoiseCalibration cal =
      Calibrate(cfg.Budget(), cfg.r, cfg.d, cfg.b, cfg.clip_norm);
  const double alpha = cfg.Alpha();
  const double sigma2 = cfg.sigma2.value_or(cal.sigma2);
  const double nu2 = EffectiveNoise(cfg.g, alpha, sigma2, cfg.sigma_a2);
  const DimensionSolution explicit_sol =
      OptimalDimExplicit(cfg.g, alpha, cal.d_z, nu2, cfg.omega);
  const DimensionSolution consistent_sol =
      OptimalDimConsistent(cfg.Budget(), cfg.b, cfg.clip_norm, cfg.d, cfg.g,
                           alpha, cfg.sigma_a2, cfg.omega, cfg.RMax());
  Table t{{"mode", "r_star", "omega", "nu2", "d_z", "bound"}, {}};
  for (const auto& s : {explicit_sol, consistent_sol}) {
    t.AddRow({std::string(DimensionModeName(s.mode)),
              static_cast<long long>(s.r_star), s.omega, s.nu2, s.d_z,
              s.bound});
  }
  return t;
}

Table MimoTable(const ExperimentConfig& cfg, const Invocation& inv) {
  const Experiment exp = PrepareExperiment(cfg);
  const std::vector<double> values =
      inv.values.empty() ? DefaultValues(SweepAxis::kM) : inv.values;
  Table t{{"M", "r", "bound", "limit_gap", "correlator_mse_emp",
           "correlator_ci95", "minimax_bound"},
          {}};
  for (double v : values) {
    const ExperimentConfig row_cfg = WithAxisValue(cfg, SweepAxis::kM, v);
    const long long m = row_cfg.antennas;
    const MimoBound b = ComputeMimoBound(cfg.r, exp.alpha, exp.sigma2,
                                         cfg.sigma_a2, exp.c_z2, m);
    double emp = kNaN;
    double ci = kNaN;
    if (m <= kMaxSimulatedAntennas) {
      const MetricSummary s = SimulateCorrelatorMse(
          cfg.r, exp.alpha, exp.sigma2, cfg.sigma_a2, exp.c_z2, m, cfg.fading,
          cfg.trials,
          DeriveSeed(cfg.master_seed, StreamTag::kChannel,
                     static_cast<std::uint64_t>(m)),
          cfg.threads);
      emp = s.mean;
      ci = s.HalfWidth();
    }
    t.AddRow({static_cast<long long>(m), static_cast<long long>(cfg.r),
              b.bound, cfg.r - b.bound, emp, ci, exp.minimax.bound});
  }
  return t;
}

int NextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

Table AcquireDemoTable(const ExperimentConfig& base) {
  ExperimentConfig cfg = base;
  cfg.features = FeatureSource::kAcquisition;
  if (cfg.m_dim == 0) cfg.m_dim = NextPowerOfTwo(2 * cfg.d);
  const Experiment exp = PrepareExperiment(cfg);
  const TrialStats stats = RunTrials(exp);

  // Pythagoras identity of the zero-fill inverse on noiseless acquisitions.
  AcquisitionOperator clean = *exp.acquisition;
  clean.sigma_w2 = 0.0;
  const Matrix projector = SampledSubspaceProjector(clean);
  double max_residual = 0.0;
  for (long i = 0; i < kChainInstances; ++i) {
    RandomStream stream(cfg.master_seed, StreamTag::kAcquisitionNoise,
                        static_cast<std::uint64_t>(i));
    Vector x(cfg.m_dim);
    for (auto& v : x) v = stream.Gaussian();
    const Vector f = Acquire(clean, x, 0);
    Vector f_hat = f;
    for (auto& v : f_hat) v += stream.Gaussian();
    const Vector x_hat = InvertAcquisition(clean, f_hat);
    const double lhs = (x_hat - x).squaredNorm();
    const double rhs = (f_hat - f).squaredNorm() +
                       (x - projector * x).squaredNorm();
    max_residual = std::max(max_residual, std::abs(lhs - rhs) / std::max(1.0, rhs));
  }

  const double c = cfg.transfer_c.value_or(DefaultTransferConstant(cfg.b));
  double c_emp = kNaN;
  if (cfg.r < cfg.d) {
    c_emp = EstimateTransferConstant(cfg.r, cfg.d, cfg.b, kTransferDraws,
                                     DeriveSeed(cfg.master_seed,
                                                StreamTag::kEncoder, 1))
                .mean;
  }
  const double adv_z = stats[Metric::kAdversaryZMse].mean;
  const double adv_f = stats[Metric::kAdversaryFMse].mean;
  const double raw = stats[Metric::kRawMse].mean;
  Table t{{"m_dim", "d", "r", "transform", "adv_z_mse", "adv_f_mse", "raw_mse",
           "raw_ge_feature", "bound_adv", "transfer_c", "transfer_bound",
           "transfer_c_emp", "transfer_bound_emp", "f_over_z_ratio",
           "pythagoras_max_residual"},
          {}};
  t.AddRow({static_cast<long long>(cfg.m_dim), static_cast<long long>(cfg.d),
            static_cast<long long>(cfg.r),
            std::string(TransformKindName(cfg.transform)), adv_z, adv_f, raw,
            static_cast<long long>(raw >= adv_f ? 1 : 0), exp.minimax.bound, c,
            TransferOrNaN(exp.minimax.bound, c, cfg), c_emp,
            std::isnan(c_emp) ? kNaN
                              : TransferOrNaN(exp.minimax.bound, c_emp, cfg),
            adv_f / adv_z, max_residual});
  return t;
}

}  // namespace

const char* SubcommandName(Subcommand cmd) {
  switch (cmd) {
    case Subcommand::kCalibrate:
      return "calibrate";
    case Subcommand::kBound:
      return "bound";
    case Subcommand::kSimulate:
      return "simulate";
    case Subcommand::kSweep:
      return "sweep";
    case Subcommand::kDimension:
      return "dimension";
    case Subcommand::kMimo:
      return "mimo";
    case Subcommand::kAcquireDemo:
      return "acquire-demo";
  }
  return "unknown";
}

std::vector<double> DefaultValues(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kEpsilon:
      return {0.1, 0.5, 1, 2, 5, 10};
    case SweepAxis::kR:
      return {1, 2, 5, 10, 20, 50};
    case SweepAxis::kM:
      return {1, 10, 100, 1e4, 1e6};
    case SweepAxis::kD:
      return {10, 20, 50, 100, 200};
    case SweepAxis::kOmega:
      return {0.5, 1, 2, 3};
  }
  return {};
}

Table BuildTable(Subcommand cmd, const ExperimentConfig& config,
                 const Invocation& inv) {
  switch (cmd) {
    case Subcommand::kCalibrate:
      return CalibrateTable(config);
    case Subcommand::kBound:
      return BoundTable(config, inv.mse_source);
    case Subcommand::kSimulate:
      return SimulateTable(config);
    case Subcommand::kSweep:
      return SweepTable(config, inv);
    case Subcommand::kDimension:
      return DimensionTable(config);
    case Subcommand::kMimo:
      return MimoTable(config, inv);
    case Subcommand::kAcquireDemo:
      return AcquireDemoTable(config);
  }
  throw ConfigError("unknown subcommand");
}

int Execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  try {
    std::vector<std::string> overrides = inv.overrides;
    if (inv.seed) overrides.push_back("master_seed=" + std::to_string(*inv.seed));
    if (inv.trials) overrides.push_back("trials=" + std::to_string(*inv.trials));
    ParsedConfig parsed = ParseConfig(inv.config_path, overrides);
    for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
    config = parsed.config;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  }

  Table table;
  try {
    table = BuildTable(inv.subcommand, config, inv);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParameter || e.code() == ErrorCode::kDimension) {
      err << "config error: " << e.what() << '\n';
      return 1;
    }
    err << ErrorCodeName(e.code()) << " error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream buffer;
  WriteTable(table, inv.output, buffer);
  if (inv.out_path.empty()) {
    out << buffer.str();
    return 0;
  }
  std::ofstream file(inv.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "cannot write '" << inv.out_path << "'\n";
    return 1;
  }
  file << buffer.str();
  return file ? 0 : 1;
}

}  // namespace featpriv::cli
