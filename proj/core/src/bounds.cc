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

#include "featpriv/bounds.h"

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

#include "featpriv/adversary.h"
#include "featpriv/error.h"

namespace featpriv {

ServerMseBound ComputeServerMseBound(double beta, double h, double alpha,
                                     const Matrix& decoder,
                                     const Matrix& encoder, double sigma2,
                                     double sigma_m2, double f_norm2) {
  Require(decoder.rows() == encoder.cols() && decoder.cols() == encoder.rows(),
          ErrorCode::kDimension, "decoder must be d x r for an r x d encoder");
  Require(sigma2 >= 0.0 && sigma_m2 >= 0.0 && f_norm2 >= 0.0,
          ErrorCode::kParameter, "variances and ||f||^2 must be non-negative");
  const double gain = beta * h * alpha;
  const Eigen::Index d = encoder.cols();
  const Matrix mismatch = gain * decoder * encoder - Matrix::Identity(d, d);
  const double decoder_energy = decoder.squaredNorm();
  ServerMseBound out;
  out.approx_term = mismatch.squaredNorm() * f_norm2;
  out.privacy_term = gain * gain * sigma2 * decoder_energy;
  out.channel_term = beta * beta * sigma_m2 * decoder_energy;
  out.total = out.approx_term + out.privacy_term + out.channel_term;
  return out;
}

AccuracyBound AccuracyLowerBound(double p0, double mse, double margin) {
  Require(margin > 0.0, ErrorCode::kParameter, "margin must be positive");
  Require(p0 >= 0.0 && p0 <= 1.0, ErrorCode::kParameter,
          "p0 must lie in [0, 1]");
  Require(mse >= 0.0, ErrorCode::kParameter, "MSE must be non-negative");
  AccuracyBound out{p0, margin, mse, 0.0};
  out.lower = std::max(0.0, p0 * (1.0 - mse / (margin * margin)));
  return out;
}

const char* DimensionModeName(DimensionMode mode) {
  return mode == DimensionMode::kExplicit ? "explicit" : "consistent";
}

DimensionSolution OptimalDimExplicit(double g, double alpha, double d_z,
                                     double nu2, double omega) {
  Require(d_z > 0.0, ErrorCode::kDegenerate, "d_z must be positive");
  Require(nu2 > 0.0, ErrorCode::kInfeasible,
          "with nu2 = 0 the adversary bound is zero for every r");
  Require(omega > 0.0, ErrorCode::kParameter, "omega must be positive");
  const double dz2 = d_z * d_z;
  Require(omega < dz2, ErrorCode::kInfeasible,
          "infeasible: omega = " + std::to_string(omega) +
              " >= d_z^2 = " + std::to_string(dz2) +
              "; the adversary bound never reaches it");
  const double ratio =
      g * g * alpha * alpha * dz2 * omega / (nu2 * (dz2 - omega));
  Require(ratio < static_cast<double>(INT_MAX - 1), ErrorCode::kInfeasible,
          "required dimension exceeds the representable range");
  int r = std::max(1, static_cast<int>(std::ceil(ratio)));
  // Settle floating-point ties at the ceiling against the bound itself.
  auto bound_at = [&](int k) {
    return ComputeMinimaxBound(g, alpha, d_z, k, nu2).bound;
  };
  while (bound_at(r) < omega) ++r;
  while (r > 1 && bound_at(r - 1) >= omega) --r;
  DimensionSolution out;
  out.r_star = r;
  out.omega = omega;
  out.mode = DimensionMode::kExplicit;
  out.nu2 = nu2;
  out.d_z = d_z;
  out.bound = bound_at(r);
  return out;
}

DimensionSolution OptimalDimConsistent(const PrivacyBudget& budget,
                                       double scale, double clip_norm, int d,
                                       double g, double alpha, double sigma_a2,
                                       double omega, int r_max) {
  budget.Validate();
  Require(r_max >= 1 && r_max <= d, ErrorCode::kParameter,
          "r_max must satisfy 1 <= r_max <= d");
  Require(omega > 0.0, ErrorCode::kParameter, "omega must be positive");
  for (int r = 1; r <= r_max; ++r) {
    const NoiseCalibration cal = Calibrate(budget, r, d, scale, clip_norm);
    const double nu2 = EffectiveNoise(g, alpha, cal.sigma2, sigma_a2);
    const MinimaxBound mb = ComputeMinimaxBound(g, alpha, cal.d_z, r, nu2);
    if (mb.bound >= omega) {
      DimensionSolution out;
      out.r_star = r;
      out.omega = omega;
      out.mode = DimensionMode::kConsistent;
      out.nu2 = nu2;
      out.d_z = cal.d_z;
      out.bound = mb.bound;
      return out;
    }
  }
  Fail(ErrorCode::kInfeasible,
       "infeasible: no r in [1, " + std::to_string(r_max) +
           "] reaches omega = " + std::to_string(omega));
}

}  // namespace featpriv
