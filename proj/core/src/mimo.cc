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

#include "featpriv/mimo.h"

#include <cmath>
#include <string>

#include "featpriv/error.h"
#include "featpriv/rng.h"

namespace featpriv {

const char* FadingLawName(FadingLaw law) {
  return law == FadingLaw::kHalfNormal ? "half_normal" : "rayleigh";
}

FadingLaw ParseFadingLaw(std::string_view name) {
  if (name == "half_normal") return FadingLaw::kHalfNormal;
  if (name == "rayleigh") return FadingLaw::kRayleigh;
  Fail(ErrorCode::kParameter, "unknown fading law '" + std::string(name) +
                                  "' (expected half_normal or rayleigh)");
}

namespace {

// Unit mean-square magnitude draws.
double DrawGain(RandomStream& stream, FadingLaw law) {
  if (law == FadingLaw::kHalfNormal) return std::abs(stream.Gaussian());
  return std::sqrt(-std::log(stream.Uniform()));
}

}  // namespace

MimoChannel SampleChannels(int antennas, FadingLaw law, double sigma_m2,
                           double sigma_a2, std::uint64_t seed) {
  Require(antennas >= 1, ErrorCode::kParameter,
          "antenna count M must be at least 1");
  Require(sigma_m2 >= 0.0 && sigma_a2 >= 0.0, ErrorCode::kParameter,
          "noise variances must be non-negative");
  MimoChannel ch;
  ch.h.resize(antennas);
  ch.h_adv.resize(antennas);
  ch.sigma_m2 = sigma_m2;
  ch.sigma_a2 = sigma_a2;
  RandomStream legit(seed, StreamTag::kChannel, 0);
  RandomStream adv(seed, StreamTag::kChannel, 1);
  for (int i = 0; i < antennas; ++i) {
    ch.h(i) = DrawGain(legit, law);
    ch.h_adv(i) = DrawGain(adv, law);
  }
  return ch;
}

MimoObservations TransmitReceive(const Vector& z_prime,
                                 const MimoChannel& channel,
                                 std::uint64_t seed) {
  Require(channel.h.size() == channel.h_adv.size(), ErrorCode::kDimension,
          "server and adversary channels must have M entries each");
  const Eigen::Index m = channel.h.size();
  const Eigen::Index r = z_prime.size();
  MimoObservations out;
  out.server = channel.h * z_prime.transpose();
  out.adversary = channel.h_adv * z_prime.transpose();
  RandomStream server_noise(seed, StreamTag::kServerNoise);
  RandomStream adv_noise(seed, StreamTag::kAdversaryNoise);
  const double sd_m = std::sqrt(channel.sigma_m2);
  const double sd_a = std::sqrt(channel.sigma_a2);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index k = 0; k < m; ++k) {
      out.server(k, i) += sd_m * server_noise.Gaussian();
      out.adversary(k, i) += sd_a * adv_noise.Gaussian();
    }
  }
  return out;
}

Vector AdversaryEstimate(const Matrix& y_adv, const Vector& h_adv, double alpha,
                         bool normalized) {
  Require(alpha > 0.0, ErrorCode::kParameter, "alpha must be positive");
  Require(y_adv.rows() == h_adv.size(), ErrorCode::kDimension,
          "observations must have one row per antenna");
  Vector z_hat = (h_adv.transpose() * y_adv).transpose() / alpha;
  if (normalized) {
    const double energy = h_adv.squaredNorm();
    Require(energy > 0.0, ErrorCode::kDegenerate,
            "normalized correlator needs a non-zero adversary channel");
    z_hat /= energy;
  }
  return z_hat;
}

MimoBound ComputeMimoBound(int r, double alpha, double sigma2, double sigma_a2,
                           double c_z2, long long antennas) {
  Require(r >= 1, ErrorCode::kDimension, "r must be at least 1");
  Require(antennas >= 1, ErrorCode::kParameter, "M must be at least 1");
  Require(alpha >= 0.0 && sigma2 >= 0.0 && sigma_a2 >= 0.0 && c_z2 >= 0.0,
          ErrorCode::kParameter, "MIMO bound inputs must be non-negative");
  const double m = static_cast<double>(antennas);
  const double a2 = alpha * alpha;
  const double numer = a2 * sigma2 / m + sigma_a2;
  const double denom = a2 * (c_z2 + sigma2) / m + sigma_a2;
  Require(denom > 0.0, ErrorCode::kDegenerate,
          "MIMO bound denominator is zero");
  MimoBound out;
  out.r = r;
  out.alpha = alpha;
  out.sigma2 = sigma2;
  out.sigma_a2 = sigma_a2;
  out.c_z2 = c_z2;
  out.antennas = antennas;
  out.bound = r * numer / denom;
  return out;
}

}  // namespace featpriv
