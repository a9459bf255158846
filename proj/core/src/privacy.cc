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

#include "featpriv/privacy.h"

#include <cmath>

#include "featpriv/error.h"
#include "featpriv/randmat.h"

namespace featpriv {

void PrivacyBudget::Validate() const {
  Require(epsilon > 0.0 && std::isfinite(epsilon), ErrorCode::kParameter,
          "epsilon must satisfy epsilon > 0");
  Require(delta > 0.0 && delta < 1.0, ErrorCode::kParameter,
          "delta must satisfy 0 < delta < 1");
}

NoiseCalibration Calibrate(const PrivacyBudget& budget, int rows, int cols,
                           double scale, double clip_norm) {
  budget.Validate();
  Require(rows >= 1 && rows <= cols, ErrorCode::kDimension,
          "calibration needs 1 <= r <= d");
  Require(scale > 0.0, ErrorCode::kParameter, "Laplace scale b must be positive");
  Require(clip_norm > 0.0, ErrorCode::kParameter, "C_f must be positive");

  const SpectralBound spectral =
      ComputeSpectralBound(rows, cols, scale, budget.delta);
  const double c_w = spectral.c_w;
  NoiseCalibration out;
  out.c_w = c_w;
  out.norm_bound = spectral.norm_bound;
  out.sensitivity = SensitivityBound(clip_norm, spectral.norm_bound);
  out.d_z = clip_norm * spectral.norm_bound;
  out.sigma2 = 8.0 * c_w * c_w * scale * scale * clip_norm * clip_norm *
               static_cast<double>(rows + cols) *
               std::log(1.25 / budget.delta) /
               (budget.epsilon * budget.epsilon);
  return out;
}

double SensitivityBound(double clip_norm, double spectral_norm_bound) {
  Require(clip_norm > 0.0 && spectral_norm_bound > 0.0, ErrorCode::kParameter,
          "sensitivity inputs must be positive");
  return 2.0 * clip_norm * spectral_norm_bound;
}

double SigmaFromSensitivity(double sensitivity, const PrivacyBudget& budget) {
  budget.Validate();
  Require(sensitivity > 0.0, ErrorCode::kParameter,
          "sensitivity must be positive");
  return 2.0 * sensitivity * sensitivity * std::log(1.25 / budget.delta) /
         (budget.epsilon * budget.epsilon);
}

}  // namespace featpriv
