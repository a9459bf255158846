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

#ifndef FEATPRIV_ADVERSARY_H_
#define FEATPRIV_ADVERSARY_H_

#include <cstdint>

#include "featpriv/linalg.h"
#include "featpriv/randmat.h"

namespace featpriv {

// Eavesdropper link: y_adv = g * alpha * z_tilde + m_adv.
struct AdversaryChannel {
  double g = 1.0;
  double sigma_a2 = 1.0;
};

// Minimax MSE of the scalar-rescaling estimator gamma * y_adv over the ball
// ||z|| <= d_z:
//   bound      = r nu2 d_z^2 / (g^2 alpha^2 d_z^2 + r nu2)
//   gamma_star = g alpha d_z^2 / (g^2 alpha^2 d_z^2 + r nu2)
struct MinimaxBound {
  double nu2 = 0.0;
  double d_z = 0.0;
  int r = 0;
  double g = 0.0;
  double alpha = 0.0;
  double bound = 0.0;
  double gamma_star = 0.0;
};

// Draws fresh privacy noise n ~ N(0, sigma2 I) and receiver noise
// m_adv ~ N(0, sigma_a2 I).
Vector Observe(const Vector& z, double alpha, const AdversaryChannel& channel,
               double sigma2, std::uint64_t seed);

// nu2 = g^2 alpha^2 sigma2 + sigma_a2.
double EffectiveNoise(double g, double alpha, double sigma2, double sigma_a2);

Vector EstimateLatent(const Vector& y_adv, double gamma);

// (gamma g alpha - 1)^2 ||z||^2 + gamma^2 r nu2.
double AdversaryMse(double gamma, double z_norm2, double g, double alpha, int r,
                    double nu2);

MinimaxBound ComputeMinimaxBound(double g, double alpha, double d_z, int r,
                                 double nu2);

// W^+ z_hat with the Moore-Penrose pseudoinverse.
Vector ReconstructFeature(const EncoderMatrix& encoder, const Vector& z_hat);

// mse_adv / (c^2 (sqrt(d) - sqrt(r) - t)^2). Throws kRegime when the gap is
// not positive.
double FeatureTransferBound(double mse_adv, double c, int d, int r, double t);

// Default constant for the transfer bound: sigma_min(W) is approximately
// b sqrt(2) (sqrt(d) - sqrt(r)) for Laplace(0, b) entries.
double DefaultTransferConstant(double scale);

struct TransferConstantEstimate {
  double mean = 0.0;  // mean of sigma_min(W) / (sqrt(d) - sqrt(r))
  double min = 0.0;
  double max = 0.0;
  int draws = 0;
};

// Monte Carlo estimate of c from sigma_min over independent encoder draws.
TransferConstantEstimate EstimateTransferConstant(int rows, int cols,
                                                  double scale, int draws,
                                                  std::uint64_t seed);

}  // namespace featpriv

#endif  // FEATPRIV_ADVERSARY_H_
