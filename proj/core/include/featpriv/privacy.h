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

#ifndef FEATPRIV_PRIVACY_H_
#define FEATPRIV_PRIVACY_H_

namespace featpriv {

struct PrivacyBudget {
  double epsilon = 1.0;
  double delta = 1e-5;

  // Throws kParameter unless epsilon > 0 and 0 < delta < 1.
  void Validate() const;
};

// Gaussian-mechanism calibration for the projected feature W f.
struct NoiseCalibration {
  double sigma2 = 0.0;       // privacy noise variance
  double sensitivity = 0.0;  // l2 sensitivity bound of W f
  double c_w = 0.0;
  double norm_bound = 0.0;   // c_w * b * (sqrt(r) + sqrt(d))
  double d_z = 0.0;          // latent-norm bound on ||W f||
};

// sigma2 = 8 c_w^2 b^2 C_f^2 (r + d) ln(1.25 / delta) / epsilon^2,
// d_z = C_f c_w b (sqrt(r) + sqrt(d)). The same delta feeds the spectral
// bound, so the resulting guarantee is (epsilon, 2 delta).
NoiseCalibration Calibrate(const PrivacyBudget& budget, int rows, int cols,
                           double scale, double clip_norm);

// 2 * C_f * ||W||_2 bound.
double SensitivityBound(double clip_norm, double spectral_norm_bound);

// Classical Gaussian mechanism: 2 * sensitivity^2 * ln(1.25 / delta) / eps^2.
double SigmaFromSensitivity(double sensitivity, const PrivacyBudget& budget);

}  // namespace featpriv

#endif  // FEATPRIV_PRIVACY_H_
