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

#ifndef FEATPRIV_PIPELINE_H_
#define FEATPRIV_PIPELINE_H_

#include <cstdint>
#include <optional>

#include "featpriv/linalg.h"
#include "featpriv/randmat.h"

namespace featpriv {

struct FeatureVector {
  Vector values;
  double clip_norm = 0.0;
};

struct LatentVector {
  Vector values;
  bool privatized = false;
};

// Block-fading link to the server. alpha = sqrt(power).
struct ChannelRealization {
  double h = 1.0;
  double sigma_m2 = 0.0;
  double alpha = 1.0;
  double power = 1.0;

  static ChannelRealization FromPower(double h, double sigma_m2, double power);
  static ChannelRealization FromAlpha(double h, double sigma_m2, double alpha);
};

struct ServerEstimate {
  Vector z_hat;
  Vector f_hat;
  double beta = 0.0;
};

// 10^(dbm / 10), milliwatts.
double DbmToLinear(double dbm);

FeatureVector ClipFeature(const Vector& raw, double clip_norm);
LatentVector Encode(const EncoderMatrix& encoder, const FeatureVector& feature);
LatentVector Privatize(const LatentVector& latent, double sigma2,
                       std::uint64_t seed);
Vector Transmit(const LatentVector& latent, double alpha);
Vector ChannelApply(const Vector& transmitted, const ChannelRealization& channel,
                    std::uint64_t seed);
Vector ServerPostprocess(const Vector& received, double beta);
ServerEstimate Decode(const Matrix& decoder, const Vector& z_hat, double beta);

struct PipelineParams {
  double sigma2 = 0.0;
  ChannelRealization channel;
  // Relative error of the channel estimate the server uses for beta:
  // beta = 1 / (alpha * h * (1 + csi_error)).
  double csi_error = 0.0;
  // Explicit beta; overrides the channel-inversion default.
  std::optional<double> beta;
};

double DefaultBeta(const PipelineParams& params);

struct PipelineRecord {
  Vector f;
  Vector z;
  Vector z_tilde;
  Vector z_prime;
  Vector y;
  Vector z_hat;
  Vector f_hat;
  double beta = 0.0;
  // ||z_hat / (beta h alpha) - z||^2 and ||f_hat - f||^2.
  double z_error2 = 0.0;
  double f_error2 = 0.0;
};

// One trial of clip -> encode -> privatize -> transmit -> channel ->
// rescale -> decode. Randomness comes from stage-tagged substreams of seed.
PipelineRecord RunPipeline(const Vector& raw_feature, double clip_norm,
                           const EncoderMatrix& encoder, const Matrix& decoder,
                           const PipelineParams& params, std::uint64_t seed);

}  // namespace featpriv

#endif  // FEATPRIV_PIPELINE_H_
