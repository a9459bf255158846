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

#ifndef FEATPRIV_MIMO_H_
#define FEATPRIV_MIMO_H_

#include <cstdint>
#include <string_view>

#include "featpriv/linalg.h"

namespace featpriv {

enum class FadingLaw { kHalfNormal, kRayleigh };

const char* FadingLawName(FadingLaw law);
FadingLaw ParseFadingLaw(std::string_view name);

// Multi-antenna transmitter, single-antenna server and eavesdropper. Both
// channel vectors have non-negative entries with unit mean square.
struct MimoChannel {
  Vector h;
  Vector h_adv;
  double sigma_m2 = 0.0;
  double sigma_a2 = 0.0;

  int antennas() const { return static_cast<int>(h.size()); }
};

struct MimoObservations {
  Matrix server;     // M x r, column i is y[i]
  Matrix adversary;  // M x r, column i is y_adv[i]
};

// r (a^2 s^2 / M + s_a^2) / (a^2 (C_z^2 + s^2) / M + s_a^2).
struct MimoBound {
  int r = 0;
  double alpha = 0.0;
  double sigma2 = 0.0;
  double sigma_a2 = 0.0;
  double c_z2 = 0.0;
  long long antennas = 0;
  double bound = 0.0;
};

MimoChannel SampleChannels(int antennas, FadingLaw law, double sigma_m2,
                           double sigma_a2, std::uint64_t seed);

MimoObservations TransmitReceive(const Vector& z_prime,
                                 const MimoChannel& channel,
                                 std::uint64_t seed);

// Correlator h_adv^T y_adv[i] / alpha per channel use. With `normalized` the
// estimate is further divided by ||h_adv||^2, which removes the channel-gain
// bias.
Vector AdversaryEstimate(const Matrix& y_adv, const Vector& h_adv, double alpha,
                         bool normalized = false);

MimoBound ComputeMimoBound(int r, double alpha, double sigma2, double sigma_a2,
                           double c_z2, long long antennas);

}  // namespace featpriv

#endif  // FEATPRIV_MIMO_H_
