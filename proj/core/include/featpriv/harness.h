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

#ifndef FEATPRIV_HARNESS_H_
#define FEATPRIV_HARNESS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "featpriv/acquisition.h"
#include "featpriv/adversary.h"
#include "featpriv/bounds.h"
#include "featpriv/linalg.h"
#include "featpriv/mimo.h"
#include "featpriv/pipeline.h"
#include "featpriv/privacy.h"
#include "featpriv/randmat.h"
#include "featpriv/rng.h"
#include "featpriv/stats.h"

namespace featpriv {

enum class FeatureSource { kMarginTask, kSphere, kAcquisition };
enum class MseSource { kConservative, kEmpirical };

const char* FeatureSourceName(FeatureSource source);
FeatureSource ParseFeatureSource(std::string_view name);

// Every knob of one simulated deployment. Defaults reproduce the parameter
// set C_f = 2, b = 0.01, d = 50, r = 10, delta = 1e-5, alpha = g = 1,
// sigma_a2 = 1 at epsilon = 1.
struct ExperimentConfig {
  int d = 50;
  int r = 10;
  int m_dim = 0;  // raw signal length, used by the acquisition source
  long long antennas = 64;

  double epsilon = 1.0;
  double delta = 1e-5;
  double b = 0.01;
  double clip_norm = 2.0;
  // Calibrated from the budget unless set.
  std::optional<double> sigma2;

  // Transmit power: at most one of p_dbm / alpha; alpha = 1 if neither.
  std::optional<double> p_dbm;
  std::optional<double> alpha;
  double h = 1.0;
  double g = 1.0;
  double sigma_m2 = 1.0;
  double sigma_a2 = 1.0;
  double sigma_w2 = 0.0;

  double omega = 1.0;
  std::optional<double> c_z2;  // defaults to d_z^2
  int r_max = 0;               // 0 means d

  int trials = 2000;
  std::uint64_t master_seed = 1;
  int threads = 0;  // 0 means hardware concurrency

  // beta = 1 / (alpha h (1 + csi_error)); 0 is perfect channel knowledge.
  double csi_error = 0.0;
  std::optional<double> gamma;  // adversary rescaling, gamma* if unset

  FeatureSource features = FeatureSource::kMarginTask;
  std::optional<double> margin;  // defaults to C_f / 3
  double p_flip = 0.0;
  std::optional<double> signal_norm;  // defaults to C_f

  TransformKind transform = TransformKind::kDct;
  FadingLaw fading = FadingLaw::kHalfNormal;

  std::optional<double> transfer_c;  // defaults to b sqrt(2)
  double transfer_t = 0.0;

  double Alpha() const;
  double Power() const;
  double Margin() const;
  double SignalNorm() const;
  int RMax() const { return r_max > 0 ? r_max : d; }
  PrivacyBudget Budget() const { return {epsilon, delta}; }

  // Throws kParameter naming the offending key and its constraint.
  void Validate() const;
};

// Two-class nearest-centroid task with centroids +-margin * u. Clean
// features sit at distance >= margin from the decision boundary u.f = 0 and
// have norm <= sqrt(5) * margin. Observed labels are flipped with
// probability p_flip, so the ideal accuracy is 1 - p_flip.
class MarginTask {
 public:
  struct Sample {
    Vector feature;
    int label = 0;       // observed label, 0 or 1
    int true_class = 0;  // class the feature was drawn from
  };

  MarginTask(int d, double margin, double p_flip, std::uint64_t seed);

  Sample Draw(RandomStream& stream) const;
  int Classify(const Vector& feature) const;
  Vector Centroid(int cls) const;

  int d() const { return static_cast<int>(axis_.size()); }
  double margin() const { return margin_; }
  double p_flip() const { return p_flip_; }
  const Vector& axis() const { return axis_; }

 private:
  Vector axis_;
  double margin_;
  double p_flip_;
};

MarginTask SynthMarginTask(int d, double margin, double p_flip,
                           std::uint64_t seed);

enum class Metric {
  kServerZMse,
  kServerFMse,
  kAdversaryZMse,
  kAdversaryFMse,
  kRawMse,
  kAccuracy,
  kCleanAccuracy,
};
inline constexpr int kMetricCount = 7;

const char* MetricName(Metric metric);

struct TrialRecord {
  std::array<double, kMetricCount> values{};
};

struct TrialStats {
  std::array<MetricSummary, kMetricCount> metrics{};

  const MetricSummary& operator[](Metric m) const {
    return metrics[static_cast<int>(m)];
  }
};

// Aggregates per-trial records; the result does not depend on the order in
// which the trials finished because records are reduced in index order.
TrialStats Aggregate(std::span<const TrialRecord> records);

// Everything derived once per configuration before trials run.
struct Experiment {
  ExperimentConfig config;
  NoiseCalibration calibration;
  double sigma2 = 0.0;
  double alpha = 1.0;
  double nu2 = 0.0;
  double gamma = 0.0;
  double c_z2 = 0.0;
  EncoderMatrix encoder;
  Matrix decoder;
  PipelineParams params;
  MinimaxBound minimax;
  ServerMseBound server_bound;  // at ||f||^2 = C_f^2
  MimoBound mimo;
  std::optional<MarginTask> task;
  std::optional<AcquisitionOperator> acquisition;
};

Experiment PrepareExperiment(const ExperimentConfig& config);

TrialRecord RunTrial(const Experiment& experiment, long index);

TrialStats RunTrials(const Experiment& experiment);
TrialStats RunTrials(const ExperimentConfig& config);

// Accuracy of `task` on server-decoded features over config.trials runs.
double EmpiricalAccuracy(const MarginTask& task, const ExperimentConfig& config);

// Monte Carlo ||gamma y_adv - z||^2 with ||z|| = z_norm in a uniformly random
// direction and y_adv = g alpha (z + n) + m_adv.
MetricSummary SimulateAdversaryMse(int r, double g, double alpha,
                                   double sigma2, double sigma_a2,
                                   double gamma, double z_norm, long trials,
                                   std::uint64_t seed, int threads = 0);

// Monte Carlo squared error of the normalized multi-antenna correlator, with
// a fresh channel draw per trial and ||z|| = sqrt(c_z2).
MetricSummary SimulateCorrelatorMse(int r, double alpha, double sigma2,
                                    double sigma_a2, double c_z2,
                                    long long antennas, FadingLaw law,
                                    long trials, std::uint64_t seed,
                                    int threads = 0);

enum class SweepAxis { kEpsilon, kR, kM, kD, kOmega };

const char* SweepAxisName(SweepAxis axis);
SweepAxis ParseSweepAxis(std::string_view name);

struct SweepRow {
  double axis_value = 0.0;
  double sigma2 = 0.0;
  double c_w = 0.0;
  double d_z = 0.0;
  double nu2 = 0.0;
  double bound_adv = 0.0;
  double gamma_star = 0.0;
  MetricSummary saddle;  // adversary MSE at gamma*, ||z|| = d_z
  TrialStats trials;
  double bound_server = 0.0;
  AccuracyBound accuracy;
  double mimo_bound = 0.0;
  // -1 when the solver reports infeasibility.
  int r_star_explicit = -1;
  int r_star_consistent = -1;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::kEpsilon;
  std::vector<double> values;
  std::vector<SweepRow> rows;
};

ExperimentConfig WithAxisValue(const ExperimentConfig& config, SweepAxis axis,
                               double value);

SweepRow EvaluateRow(const ExperimentConfig& config, SweepAxis axis,
                     double value, MseSource mse_source);

SweepResult Sweep(const ExperimentConfig& config, SweepAxis axis,
                  std::span<const double> values,
                  MseSource mse_source = MseSource::kConservative);

}  // namespace featpriv

#endif  // FEATPRIV_HARNESS_H_
