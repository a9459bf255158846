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

#ifndef FEATPRIV_RNG_H_
#define FEATPRIV_RNG_H_

#include <cstdint>
#include <random>

namespace featpriv {

// Stage tags for seed derivation. Every random draw in a trial comes from a
// stream keyed by (seed, tag, index), so results do not depend on the order
// in which stages or trials are evaluated.
enum class StreamTag : std::uint64_t {
  kEncoder = 1,
  kFeature = 2,
  kPrivacyNoise = 3,
  kServerNoise = 4,
  kAdversaryNoise = 5,
  kAcquisitionSelect = 6,
  kAcquisitionNoise = 7,
  kAcquisitionTransform = 8,
  kChannel = 9,
  kLabel = 10,
  kTrial = 11,
  kTask = 12,
  kConfig = 13,
};

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

std::uint64_t DeriveSeed(std::uint64_t seed, StreamTag tag,
                         std::uint64_t index = 0);

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(Mix64(seed)) {}
  RandomStream(std::uint64_t seed, StreamTag tag, std::uint64_t index = 0)
      : RandomStream(DeriveSeed(seed, tag, index)) {}

  // Uniform on the open interval (0, 1), 53 bits of resolution.
  double Uniform();
  double Gaussian() { return normal_(engine_); }
  // Laplace(0, scale) by inverse CDF.
  double Laplace(double scale);
  // Uniform integer in [0, n).
  std::uint64_t Below(std::uint64_t n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace featpriv

#endif  // FEATPRIV_RNG_H_
