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

#ifndef FEATPRIV_BOUNDS_H_
#define FEATPRIV_BOUNDS_H_

#include "featpriv/linalg.h"
#include "featpriv/privacy.h"

namespace featpriv {

// Server MSE upper bound, split into its three sources.
struct ServerMseBound {
  double approx_term = 0.0;   // ||beta h alpha D W - I||_F^2 ||f||^2
  double privacy_term = 0.0;  // beta^2 h^2 alpha^2 sigma2 ||D||_F^2
  double channel_term = 0.0;  // beta^2 sigma_m2 ||D||_F^2
  double total = 0.0;
};

ServerMseBound ComputeServerMseBound(double beta, double h, double alpha,
                                     const Matrix& decoder,
                                     const Matrix& encoder, double sigma2,
                                     double sigma_m2, double f_norm2);

// lower = max(0, p0 (1 - mse / margin^2)).
struct AccuracyBound {
  double p0 = 0.0;
  double margin = 0.0;
  double mse = 0.0;
  double lower = 0.0;
};

AccuracyBound AccuracyLowerBound(double p0, double mse, double margin);

enum class DimensionMode { kExplicit, kConsistent };

const char* DimensionModeName(DimensionMode mode);

struct DimensionSolution {
  int r_star = 1;
  double omega = 0.0;
  DimensionMode mode = DimensionMode::kExplicit;
  // Values of the effective noise, latent bound and minimax bound at r_star.
  double nu2 = 0.0;
  double d_z = 0.0;
  double bound = 0.0;
};

// Closed-form minimal r with the minimax bound >= omega, holding nu2 and d_z
// fixed. Requires 0 < omega < d_z^2 (kInfeasible otherwise).
DimensionSolution OptimalDimExplicit(double g, double alpha, double d_z,
                                     double nu2, double omega);

// Smallest r in [1, r_max] whose minimax bound reaches omega when sigma2 and
// d_z are recalibrated at every r.
DimensionSolution OptimalDimConsistent(const PrivacyBudget& budget,
                                       double scale, double clip_norm, int d,
                                       double g, double alpha, double sigma_a2,
                                       double omega, int r_max);

}  // namespace featpriv

#endif  // FEATPRIV_BOUNDS_H_
