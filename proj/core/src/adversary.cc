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

#include "featpriv/adversary.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "featpriv/error.h"
#include "featpriv/rng.h"

namespace featpriv {

Vector Observe(const Vector& z, double alpha, const AdversaryChannel& channel,
               double sigma2, std::uint64_t seed) {
  Require(sigma2 >= 0.0, ErrorCode::kParameter, "sigma2 must be non-negative");
  Require(channel.sigma_a2 >= 0.0, ErrorCode::kParameter,
          "sigma_a2 must be non-negative");
  RandomStream privacy(seed, StreamTag::kPrivacyNoise);
  RandomStream receiver(seed, StreamTag::kAdversaryNoise);
  const double sd_n = std::sqrt(sigma2);
  const double sd_m = std::sqrt(channel.sigma_a2);
  const double gain = channel.g * alpha;
  Vector y(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    y(i) = gain * (z(i) + sd_n * privacy.Gaussian()) + sd_m * receiver.Gaussian();
  }
  return y;
}

double EffectiveNoise(double g, double alpha, double sigma2, double sigma_a2) {
  Require(sigma2 >= 0.0 && sigma_a2 >= 0.0, ErrorCode::kParameter,
          "noise variances must be non-negative");
  return g * g * alpha * alpha * sigma2 + sigma_a2;
}

Vector EstimateLatent(const Vector& y_adv, double gamma) { return gamma * y_adv; }

double AdversaryMse(double gamma, double z_norm2, double g, double alpha, int r,
                    double nu2) {
  Require(z_norm2 >= 0.0, ErrorCode::kParameter, "||z||^2 must be non-negative");
  const double bias = gamma * g * alpha - 1.0;
  return bias * bias * z_norm2 + gamma * gamma * r * nu2;
}

MinimaxBound ComputeMinimaxBound(double g, double alpha, double d_z, int r,
                                 double nu2) {
  Require(d_z > 0.0, ErrorCode::kDegenerate,
          "minimax bound undefined for d_z = 0 (z is known to be zero)");
  Require(r >= 1, ErrorCode::kDimension, "r must be at least 1");
  Require(nu2 >= 0.0, ErrorCode::kParameter, "nu2 must be non-negative");
  const double signal = g * g * alpha * alpha * d_z * d_z;
  const double noise = r * nu2;
  const double denom = signal + noise;
  Require(denom > 0.0, ErrorCode::kDegenerate,
          "minimax bound undefined when g * alpha = 0 and nu2 = 0");
  MinimaxBound out;
  out.nu2 = nu2;
  out.d_z = d_z;
  out.r = r;
  out.g = g;
  out.alpha = alpha;
  out.bound = noise * d_z * d_z / denom;
  out.gamma_star = g * alpha * d_z * d_z / denom;
  return out;
}

Vector ReconstructFeature(const EncoderMatrix& encoder, const Vector& z_hat) {
  Require(z_hat.size() == encoder.rows(), ErrorCode::kDimension,
          "reconstruct: z_hat length must equal r");
  return Pseudoinverse(encoder.entries) * z_hat;
}

double FeatureTransferBound(double mse_adv, double c, int d, int r, double t) {
  Require(c > 0.0, ErrorCode::kParameter, "transfer constant c must be positive");
  Require(mse_adv >= 0.0, ErrorCode::kParameter, "MSE must be non-negative");
  const double gap = std::sqrt(static_cast<double>(d)) -
                     std::sqrt(static_cast<double>(r)) - t;
  Require(gap > 0.0, ErrorCode::kRegime,
          "transfer bound is vacuous: sqrt(d) - sqrt(r) - t = " +
              std::to_string(gap) + " <= 0");
  return mse_adv / (c * c * gap * gap);
}

double DefaultTransferConstant(double scale) {
  Require(scale > 0.0, ErrorCode::kParameter, "Laplace scale b must be positive");
  return scale * std::sqrt(2.0);
}

TransferConstantEstimate EstimateTransferConstant(int rows, int cols,
                                                  double scale, int draws,
                                                  std::uint64_t seed) {
  Require(draws >= 1, ErrorCode::kParameter, "need at least one draw");
  const double gap = std::sqrt(static_cast<double>(cols)) -
                     std::sqrt(static_cast<double>(rows));
  Require(gap > 0.0, ErrorCode::kRegime,
          "sigma_min scaling needs r < d");
  TransferConstantEstimate out;
  out.draws = draws;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) {
    const EncoderMatrix w = SampleEncoder(
        rows, cols, scale, DeriveSeed(seed, StreamTag::kConfig, i));
    const double c = SmallestSingularValue(w.entries) / gap;
    sum += c;
    out.min = i == 0 ? c : std::min(out.min, c);
    out.max = i == 0 ? c : std::max(out.max, c);
  }
  out.mean = sum / draws;
  return out;
}

}  // namespace featpriv
