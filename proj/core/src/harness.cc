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

#include "featpriv/harness.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "featpriv/error.h"
#include "parallel.h"

namespace featpriv {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string Num(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

void Check(bool ok, const std::string& key, const std::string& constraint,
           double value) {
  if (!ok) {
    Fail(ErrorCode::kParameter, "invalid " + key + ": must satisfy " +
                                    constraint + " (got " + Num(value) + ")");
  }
}

Vector RandomUnitVector(RandomStream& stream, int n) {
  Vector u(n);
  do {
    for (int i = 0; i < n; ++i) u(i) = stream.Gaussian();
  } while (u.squaredNorm() == 0.0);
  return u.normalized();
}

}  // namespace

const char* FeatureSourceName(FeatureSource source) {
  switch (source) {
    case FeatureSource::kMarginTask:
      return "margin_task";
    case FeatureSource::kSphere:
      return "sphere";
    case FeatureSource::kAcquisition:
      return "acquisition";
  }
  return "unknown";
}

FeatureSource ParseFeatureSource(std::string_view name) {
  if (name == "margin_task") return FeatureSource::kMarginTask;
  if (name == "sphere") return FeatureSource::kSphere;
  if (name == "acquisition") return FeatureSource::kAcquisition;
  Fail(ErrorCode::kParameter,
       "unknown feature source '" + std::string(name) +
           "' (expected margin_task, sphere or acquisition)");
}

double ExperimentConfig::Alpha() const {
  if (alpha) return *alpha;
  if (p_dbm) return std::sqrt(DbmToLinear(*p_dbm));
  return 1.0;
}

double ExperimentConfig::Power() const {
  if (p_dbm && !alpha) return DbmToLinear(*p_dbm);
  const double a = Alpha();
  return a * a;
}

double ExperimentConfig::Margin() const {
  return margin ? *margin : clip_norm / 3.0;
}

double ExperimentConfig::SignalNorm() const {
  return signal_norm ? *signal_norm : clip_norm;
}

void ExperimentConfig::Validate() const {
  Check(d >= 1, "d", "d >= 1", d);
  Check(r >= 1 && r <= d, "r", "1 <= r <= d", r);
  Check(antennas >= 1, "M", "M >= 1", static_cast<double>(antennas));
  Check(epsilon > 0.0 && std::isfinite(epsilon), "epsilon", "epsilon > 0",
        epsilon);
  Check(delta > 0.0 && delta < 1.0, "delta", "0 < delta < 1", delta);
  Check(b > 0.0 && std::isfinite(b), "b", "b > 0", b);
  Check(clip_norm > 0.0 && std::isfinite(clip_norm), "C_f", "C_f > 0",
        clip_norm);
  if (sigma2) Check(*sigma2 >= 0.0, "sigma2", "sigma2 >= 0", *sigma2);
  if (alpha && p_dbm) {
    Fail(ErrorCode::kParameter,
         "invalid alpha: set at most one of alpha and P_dbm");
  }
  if (alpha) Check(*alpha > 0.0, "alpha", "alpha > 0", *alpha);
  if (p_dbm) Check(std::isfinite(*p_dbm), "P_dbm", "finite P_dbm", *p_dbm);
  Check(h != 0.0 && std::isfinite(h), "h", "h != 0", h);
  Check(std::isfinite(g), "g", "finite g", g);
  Check(sigma_m2 >= 0.0, "sigma_m2", "sigma_m2 >= 0", sigma_m2);
  Check(sigma_a2 >= 0.0, "sigma_a2", "sigma_a2 >= 0", sigma_a2);
  Check(sigma_w2 >= 0.0, "sigma_w2", "sigma_w2 >= 0", sigma_w2);
  Check(omega > 0.0, "omega", "omega > 0", omega);
  if (c_z2) Check(*c_z2 >= 0.0, "c_z2", "c_z2 >= 0", *c_z2);
  Check(r_max >= 0 && r_max <= d, "r_max", "0 <= r_max <= d (0 means d)",
        r_max);
  Check(trials >= 1, "trials", "trials >= 1", trials);
  Check(threads >= 0, "threads", "threads >= 0", threads);
  Check(csi_error > -1.0, "csi_error", "csi_error > -1", csi_error);
  const double m = Margin();
  Check(m > 0.0, "margin", "margin > 0", m);
  if (features == FeatureSource::kMarginTask) {
    Check(m * std::sqrt(5.0) <= clip_norm, "margin",
          "sqrt(5) * margin <= C_f so task features are never clipped", m);
  }
  Check(p_flip >= 0.0 && p_flip < 0.5, "p_flip", "0 <= p_flip < 0.5", p_flip);
  Check(SignalNorm() > 0.0, "signal_norm", "signal_norm > 0", SignalNorm());
  if (features == FeatureSource::kAcquisition || m_dim > 0) {
    Check(m_dim >= d, "m_dim", "m_dim >= d when acquisition is enabled",
          m_dim);
    if (transform == TransformKind::kHadamard) {
      Check((m_dim & (m_dim - 1)) == 0, "m_dim",
            "power of two for the hadamard transform", m_dim);
    }
  }
  if (transfer_c) {
    Check(*transfer_c > 0.0, "transfer_c", "transfer_c > 0", *transfer_c);
  }
  Check(transfer_t >= 0.0, "transfer_t", "transfer_t >= 0", transfer_t);
}

MarginTask::MarginTask(int d, double margin, double p_flip, std::uint64_t seed)
    : margin_(margin), p_flip_(p_flip) {
  Require(d >= 1, ErrorCode::kDimension, "task dimension must be positive");
  Require(margin > 0.0, ErrorCode::kParameter, "margin must be positive");
  Require(p_flip >= 0.0 && p_flip < 0.5, ErrorCode::kParameter,
          "p_flip must lie in [0, 0.5)");
  RandomStream stream(seed, StreamTag::kTask);
  axis_ = RandomUnitVector(stream, d);
}

MarginTask::Sample MarginTask::Draw(RandomStream& stream) const {
  Sample s;
  s.true_class = stream.Uniform() < 0.5 ? 0 : 1;
  const double sign = s.true_class == 1 ? 1.0 : -1.0;
  // Distance from the boundary in [margin, 2 margin].
  const double along = sign * margin_ * (1.0 + stream.Uniform());
  s.feature = along * axis_;
  if (d() > 1) {
    Vector v = RandomUnitVector(stream, d());
    v -= v.dot(axis_) * axis_;
    const double norm = v.norm();
    if (norm > 0.0) s.feature += (margin_ * stream.Uniform() / norm) * v;
  }
  const bool flip = stream.Uniform() < p_flip_;
  s.label = flip ? 1 - s.true_class : s.true_class;
  return s;
}

int MarginTask::Classify(const Vector& feature) const {
  Require(feature.size() == axis_.size(), ErrorCode::kDimension,
          "classify: feature length must equal d");
  // Nearest centroid between +-margin * axis is the sign of the projection.
  return feature.dot(axis_) >= 0.0 ? 1 : 0;
}

Vector MarginTask::Centroid(int cls) const {
  return (cls == 1 ? margin_ : -margin_) * axis_;
}

MarginTask SynthMarginTask(int d, double margin, double p_flip,
                           std::uint64_t seed) {
  return MarginTask(d, margin, p_flip, seed);
}

const char* MetricName(Metric metric) {
  switch (metric) {
    case Metric::kServerZMse:
      return "server_z_mse";
    case Metric::kServerFMse:
      return "server_f_mse";
    case Metric::kAdversaryZMse:
      return "adversary_z_mse";
    case Metric::kAdversaryFMse:
      return "adversary_f_mse";
    case Metric::kRawMse:
      return "raw_mse";
    case Metric::kAccuracy:
      return "accuracy";
    case Metric::kCleanAccuracy:
      return "clean_accuracy";
  }
  return "unknown";
}

TrialStats Aggregate(std::span<const TrialRecord> records) {
  TrialStats stats;
  std::vector<double> column(records.size());
  for (int m = 0; m < kMetricCount; ++m) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      column[i] = records[i].values[m];
    }
    stats.metrics[m] = Summarize(column);
  }
  return stats;
}

Experiment PrepareExperiment(const ExperimentConfig& config) {
  config.Validate();
  Experiment exp;
  exp.config = config;
  exp.alpha = config.Alpha();
  exp.calibration = Calibrate(config.Budget(), config.r, config.d, config.b,
                              config.clip_norm);
  exp.sigma2 = config.sigma2.value_or(exp.calibration.sigma2);
  exp.encoder = SampleEncoder(
      config.r, config.d, config.b,
      DeriveSeed(config.master_seed, StreamTag::kEncoder));
  exp.decoder = Pseudoinverse(exp.encoder.entries);
  exp.params.sigma2 = exp.sigma2;
  exp.params.channel =
      config.p_dbm && !config.alpha
          ? ChannelRealization::FromPower(config.h, config.sigma_m2,
                                          config.Power())
          : ChannelRealization::FromAlpha(config.h, config.sigma_m2, exp.alpha);
  exp.params.csi_error = config.csi_error;
  exp.nu2 = EffectiveNoise(config.g, exp.alpha, exp.sigma2, config.sigma_a2);
  exp.minimax = ComputeMinimaxBound(config.g, exp.alpha, exp.calibration.d_z,
                                    config.r, exp.nu2);
  exp.gamma = config.gamma.value_or(exp.minimax.gamma_star);
  exp.server_bound = ComputeServerMseBound(
      DefaultBeta(exp.params), config.h, exp.alpha, exp.decoder,
      exp.encoder.entries, exp.sigma2, config.sigma_m2,
      config.clip_norm * config.clip_norm);
  exp.c_z2 = config.c_z2.value_or(exp.calibration.d_z * exp.calibration.d_z);
  exp.mimo = ComputeMimoBound(config.r, exp.alpha, exp.sigma2,
                              config.sigma_a2, exp.c_z2, config.antennas);
  if (config.features == FeatureSource::kMarginTask) {
    exp.task.emplace(config.d, config.Margin(), config.p_flip,
                     DeriveSeed(config.master_seed, StreamTag::kTask));
  }
  if (config.features == FeatureSource::kAcquisition) {
    exp.acquisition = BuildAcquisition(
        config.m_dim, config.d, config.transform, config.sigma_w2,
        DeriveSeed(config.master_seed, StreamTag::kAcquisitionSelect));
  }
  return exp;
}

TrialRecord RunTrial(const Experiment& exp, long index) {
  const ExperimentConfig& cfg = exp.config;
  const std::uint64_t seed =
      DeriveSeed(cfg.master_seed, StreamTag::kTrial, static_cast<std::uint64_t>(index));
  RandomStream feature_stream(seed, StreamTag::kFeature);

  TrialRecord rec;
  rec.values.fill(kNaN);

  Vector raw;
  Vector x;
  std::optional<MarginTask::Sample> sample;
  switch (cfg.features) {
    case FeatureSource::kMarginTask:
      sample = exp.task->Draw(feature_stream);
      raw = sample->feature;
      break;
    case FeatureSource::kSphere:
      raw = cfg.SignalNorm() * RandomUnitVector(feature_stream, cfg.d);
      break;
    case FeatureSource::kAcquisition:
      x = cfg.SignalNorm() * RandomUnitVector(feature_stream, cfg.m_dim);
      raw = Acquire(*exp.acquisition, x, seed);
      break;
  }

  const PipelineRecord pipe = RunPipeline(raw, cfg.clip_norm, exp.encoder,
                                          exp.decoder, exp.params, seed);
  rec.values[static_cast<int>(Metric::kServerZMse)] = pipe.z_error2;
  rec.values[static_cast<int>(Metric::kServerFMse)] = pipe.f_error2;

  // The eavesdropper hears the same transmitted signal through its own gain.
  RandomStream adv_noise(seed, StreamTag::kAdversaryNoise);
  const double sd_a = std::sqrt(cfg.sigma_a2);
  Vector y_adv = cfg.g * pipe.z_prime;
  for (Eigen::Index i = 0; i < y_adv.size(); ++i) {
    y_adv(i) += sd_a * adv_noise.Gaussian();
  }
  const Vector z_adv = EstimateLatent(y_adv, exp.gamma);
  const Vector f_adv = exp.decoder * z_adv;
  rec.values[static_cast<int>(Metric::kAdversaryZMse)] =
      (z_adv - pipe.z).squaredNorm();
  rec.values[static_cast<int>(Metric::kAdversaryFMse)] =
      (f_adv - pipe.f).squaredNorm();
  if (exp.acquisition) {
    const Vector x_adv = InvertAcquisition(*exp.acquisition, f_adv);
    rec.values[static_cast<int>(Metric::kRawMse)] = (x_adv - x).squaredNorm();
  }
  if (sample) {
    rec.values[static_cast<int>(Metric::kAccuracy)] =
        exp.task->Classify(pipe.f_hat) == sample->label ? 1.0 : 0.0;
    rec.values[static_cast<int>(Metric::kCleanAccuracy)] =
        exp.task->Classify(pipe.f) == sample->label ? 1.0 : 0.0;
  }
  return rec;
}

TrialStats RunTrials(const Experiment& exp) {
  const long n = exp.config.trials;
  std::vector<TrialRecord> records(n);
  internal::ParallelFor(n, exp.config.threads, [&](long i) {
    try {
      records[i] = RunTrial(exp, i);
    } catch (const Error& e) {
      throw Error(e.code(), "trial " + std::to_string(i) + ": " + e.what());
    }
  });
  return Aggregate(records);
}

TrialStats RunTrials(const ExperimentConfig& config) {
  return RunTrials(PrepareExperiment(config));
}

double EmpiricalAccuracy(const MarginTask& task,
                         const ExperimentConfig& config) {
  Require(task.d() == config.d, ErrorCode::kDimension,
          "task dimension must equal d");
  ExperimentConfig cfg = config;
  cfg.features = FeatureSource::kMarginTask;
  cfg.margin = task.margin();
  cfg.p_flip = task.p_flip();
  Experiment exp = PrepareExperiment(cfg);
  exp.task = task;
  return RunTrials(exp)[Metric::kAccuracy].mean;
}

MetricSummary SimulateAdversaryMse(int r, double g, double alpha,
                                   double sigma2, double sigma_a2,
                                   double gamma, double z_norm, long trials,
                                   std::uint64_t seed, int threads) {
  Require(r >= 1, ErrorCode::kDimension, "r must be at least 1");
  Require(trials >= 1, ErrorCode::kParameter, "trials must be at least 1");
  Require(sigma2 >= 0.0 && sigma_a2 >= 0.0 && z_norm >= 0.0,
          ErrorCode::kParameter, "variances and ||z|| must be non-negative");
  const double gain = g * alpha;
  const double sd_n = std::sqrt(sigma2);
  const double sd_m = std::sqrt(sigma_a2);
  std::vector<double> errors(trials);
  internal::ParallelFor(trials, threads, [&](long i) {
    const std::uint64_t trial_seed =
        DeriveSeed(seed, StreamTag::kTrial, static_cast<std::uint64_t>(i));
    RandomStream direction(trial_seed, StreamTag::kFeature);
    RandomStream privacy(trial_seed, StreamTag::kPrivacyNoise);
    RandomStream receiver(trial_seed, StreamTag::kAdversaryNoise);
    const Vector z = z_norm * RandomUnitVector(direction, r);
    double err = 0.0;
    for (int k = 0; k < r; ++k) {
      const double y =
          gain * (z(k) + sd_n * privacy.Gaussian()) + sd_m * receiver.Gaussian();
      const double e = gamma * y - z(k);
      err += e * e;
    }
    errors[i] = err;
  });
  return Summarize(errors);
}

MetricSummary SimulateCorrelatorMse(int r, double alpha, double sigma2,
                                    double sigma_a2, double c_z2,
                                    long long antennas, FadingLaw law,
                                    long trials, std::uint64_t seed,
                                    int threads) {
  Require(r >= 1, ErrorCode::kDimension, "r must be at least 1");
  Require(trials >= 1, ErrorCode::kParameter, "trials must be at least 1");
  Require(antennas >= 1 && antennas <= std::numeric_limits<int>::max(),
          ErrorCode::kParameter, "M out of range for simulation");
  Require(c_z2 >= 0.0 && sigma2 >= 0.0, ErrorCode::kParameter,
          "c_z2 and sigma2 must be non-negative");
  const double sd_n = std::sqrt(sigma2);
  const double z_norm = std::sqrt(c_z2);
  std::vector<double> errors(trials);
  internal::ParallelFor(trials, threads, [&](long i) {
    const std::uint64_t trial_seed =
        DeriveSeed(seed, StreamTag::kTrial, static_cast<std::uint64_t>(i));
    const MimoChannel ch = SampleChannels(static_cast<int>(antennas), law, 0.0,
                                          sigma_a2, trial_seed);
    RandomStream direction(trial_seed, StreamTag::kFeature);
    RandomStream privacy(trial_seed, StreamTag::kPrivacyNoise);
    const Vector z = z_norm * RandomUnitVector(direction, r);
    Vector z_prime(r);
    for (int k = 0; k < r; ++k) {
      z_prime(k) = alpha * (z(k) + sd_n * privacy.Gaussian());
    }
    const MimoObservations obs = TransmitReceive(z_prime, ch, trial_seed);
    const Vector z_hat = AdversaryEstimate(obs.adversary, ch.h_adv, alpha,
                                           /*normalized=*/true);
    errors[i] = (z_hat - z).squaredNorm();
  });
  return Summarize(errors);
}

const char* SweepAxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kEpsilon:
      return "epsilon";
    case SweepAxis::kR:
      return "r";
    case SweepAxis::kM:
      return "M";
    case SweepAxis::kD:
      return "d";
    case SweepAxis::kOmega:
      return "omega";
  }
  return "unknown";
}

SweepAxis ParseSweepAxis(std::string_view name) {
  if (name == "epsilon") return SweepAxis::kEpsilon;
  if (name == "r") return SweepAxis::kR;
  if (name == "M") return SweepAxis::kM;
  if (name == "d") return SweepAxis::kD;
  if (name == "omega") return SweepAxis::kOmega;
  Fail(ErrorCode::kParameter, "unknown sweep axis '" + std::string(name) +
                                  "' (expected epsilon, r, M, d or omega)");
}

ExperimentConfig WithAxisValue(const ExperimentConfig& config, SweepAxis axis,
                               double value) {
  ExperimentConfig out = config;
  auto as_integer = [&](double limit) {
    Require(std::isfinite(value) && value == std::floor(value) && value >= 1 &&
                value <= limit,
            ErrorCode::kParameter,
            std::string("sweep value ") + Num(value) + " for axis " +
                SweepAxisName(axis) + " must be a positive integer");
    return value;
  };
  switch (axis) {
    case SweepAxis::kEpsilon:
      out.epsilon = value;
      break;
    case SweepAxis::kR:
      out.r = static_cast<int>(as_integer(std::numeric_limits<int>::max()));
      break;
    case SweepAxis::kM:
      out.antennas = static_cast<long long>(as_integer(1e15));
      break;
    case SweepAxis::kD:
      out.d = static_cast<int>(as_integer(std::numeric_limits<int>::max()));
      break;
    case SweepAxis::kOmega:
      out.omega = value;
      break;
  }
  try {
    out.Validate();
  } catch (const Error& e) {
    throw Error(e.code(), std::string("sweep value ") + Num(value) +
                              " for axis " + SweepAxisName(axis) + ": " +
                              e.what());
  }
  return out;
}

SweepRow EvaluateRow(const ExperimentConfig& config, SweepAxis axis,
                     double value, MseSource mse_source) {
  const ExperimentConfig cfg = WithAxisValue(config, axis, value);
  const Experiment exp = PrepareExperiment(cfg);
  SweepRow row;
  row.axis_value = value;
  row.sigma2 = exp.sigma2;
  row.c_w = exp.calibration.c_w;
  row.d_z = exp.calibration.d_z;
  row.nu2 = exp.nu2;
  row.bound_adv = exp.minimax.bound;
  row.gamma_star = exp.minimax.gamma_star;
  row.trials = RunTrials(exp);
  row.saddle = SimulateAdversaryMse(
      cfg.r, cfg.g, exp.alpha, exp.sigma2, cfg.sigma_a2,
      exp.minimax.gamma_star, exp.calibration.d_z, cfg.trials,
      DeriveSeed(cfg.master_seed, StreamTag::kAdversaryNoise), cfg.threads);
  row.bound_server = exp.server_bound.total;
  if (exp.task) {
    const double mse = mse_source == MseSource::kConservative
                           ? exp.server_bound.total
                           : row.trials[Metric::kServerFMse].mean;
    row.accuracy = AccuracyLowerBound(row.trials[Metric::kCleanAccuracy].mean,
                                      mse, exp.task->margin());
  } else {
    row.accuracy = {kNaN, kNaN, kNaN, kNaN};
  }
  row.mimo_bound = exp.mimo.bound;
  try {
    row.r_star_explicit = OptimalDimExplicit(cfg.g, exp.alpha,
                                             exp.calibration.d_z, exp.nu2,
                                             cfg.omega)
                              .r_star;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasible) throw;
  }
  try {
    row.r_star_consistent =
        OptimalDimConsistent(cfg.Budget(), cfg.b, cfg.clip_norm, cfg.d, cfg.g,
                             exp.alpha, cfg.sigma_a2, cfg.omega, cfg.RMax())
            .r_star;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasible) throw;
  }
  return row;
}

SweepResult Sweep(const ExperimentConfig& config, SweepAxis axis,
                  std::span<const double> values, MseSource mse_source) {
  Require(!values.empty(), ErrorCode::kParameter, "sweep needs at least one value");
  SweepResult out;
  out.axis = axis;
  out.values.assign(values.begin(), values.end());
  // Validate the whole grid before spending time on trials.
  for (double v : values) WithAxisValue(config, axis, v);
  for (double v : values) out.rows.push_back(EvaluateRow(config, axis, v, mse_source));
  return out;
}

}  // namespace featpriv
