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

#include "featpriv/pipeline.h"

#include <cmath>
#include <limits>
#include <string>

#include "featpriv/error.h"
#include "featpriv/rng.h"

namespace featpriv {
namespace {

void RequireLength(Eigen::Index got, Eigen::Index want, const char* what) {
  Require(got == want, ErrorCode::kDimension,
          std::string(what) + ": expected length " + std::to_string(want) +
              ", got " + std::to_string(got));
}

}  // namespace

ChannelRealization ChannelRealization::FromPower(double h, double sigma_m2,
                                                 double power) {
  Require(power > 0.0, ErrorCode::kParameter, "transmit power must be positive");
  return {h, sigma_m2, std::sqrt(power), power};
}

ChannelRealization ChannelRealization::FromAlpha(double h, double sigma_m2,
                                                 double alpha) {
  Require(alpha > 0.0, ErrorCode::kParameter, "alpha must be positive");
  return {h, sigma_m2, alpha, alpha * alpha};
}

double DbmToLinear(double dbm) { return std::pow(10.0, dbm / 10.0); }

FeatureVector ClipFeature(const Vector& raw, double clip_norm) {
  Require(raw.size() >= 1, ErrorCode::kDimension, "cannot clip an empty vector");
  Require(clip_norm > 0.0, ErrorCode::kParameter, "C_f must be positive");
  const double norm = raw.norm();
  FeatureVector out{raw, clip_norm};
  // Zero input stays zero; inside the ball nothing changes.
  if (norm > clip_norm) {
    out.values *= clip_norm / norm;
    // Rounding can leave the norm an ulp above C_f; shrink until it is inside
    // so that clipping is exactly idempotent.
    while (out.values.norm() > clip_norm) {
      out.values *= 1.0 - std::numeric_limits<double>::epsilon();
    }
  }
  return out;
}

LatentVector Encode(const EncoderMatrix& encoder, const FeatureVector& feature) {
  RequireLength(feature.values.size(), encoder.cols(), "encode");
  return {encoder.entries * feature.values, false};
}

LatentVector Privatize(const LatentVector& latent, double sigma2,
                       std::uint64_t seed) {
  Require(sigma2 >= 0.0, ErrorCode::kParameter, "sigma2 must be non-negative");
  LatentVector out{latent.values, true};
  if (sigma2 == 0.0) return out;
  RandomStream stream(seed, StreamTag::kPrivacyNoise);
  const double sd = std::sqrt(sigma2);
  for (Eigen::Index i = 0; i < out.values.size(); ++i) {
    out.values(i) += sd * stream.Gaussian();
  }
  return out;
}

Vector Transmit(const LatentVector& latent, double alpha) {
  Require(alpha > 0.0, ErrorCode::kParameter, "alpha must be positive");
  return alpha * latent.values;
}

Vector ChannelApply(const Vector& transmitted, const ChannelRealization& channel,
                    std::uint64_t seed) {
  Require(channel.sigma_m2 >= 0.0, ErrorCode::kParameter,
          "sigma_m2 must be non-negative");
  Vector out = channel.h * transmitted;
  if (channel.sigma_m2 == 0.0) return out;
  RandomStream stream(seed, StreamTag::kServerNoise);
  const double sd = std::sqrt(channel.sigma_m2);
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) += sd * stream.Gaussian();
  return out;
}

Vector ServerPostprocess(const Vector& received, double beta) {
  Require(beta > 0.0, ErrorCode::kParameter, "beta must be positive");
  return beta * received;
}

ServerEstimate Decode(const Matrix& decoder, const Vector& z_hat, double beta) {
  RequireLength(z_hat.size(), decoder.cols(), "decode");
  return {z_hat, decoder * z_hat, beta};
}

double DefaultBeta(const PipelineParams& params) {
  if (params.beta) return *params.beta;
  const double effective_h = params.channel.h * (1.0 + params.csi_error);
  Require(effective_h != 0.0, ErrorCode::kDegenerate,
          "channel inversion needs h != 0");
  // A negative gain is inverted by beta's sign; ServerPostprocess needs a
  // positive factor, so the sign is folded back in RunPipeline.
  return 1.0 / (params.channel.alpha * effective_h);
}

PipelineRecord RunPipeline(const Vector& raw_feature, double clip_norm,
                           const EncoderMatrix& encoder, const Matrix& decoder,
                           const PipelineParams& params, std::uint64_t seed) {
  Require(decoder.rows() == encoder.cols() && decoder.cols() == encoder.rows(),
          ErrorCode::kDimension, "decoder must be d x r");
  PipelineRecord rec;
  const FeatureVector f = ClipFeature(raw_feature, clip_norm);
  const LatentVector z = Encode(encoder, f);
  const LatentVector z_tilde =
      Privatize(z, params.sigma2, seed);
  rec.f = f.values;
  rec.z = z.values;
  rec.z_tilde = z_tilde.values;
  rec.z_prime = Transmit(z_tilde, params.channel.alpha);
  rec.y = ChannelApply(rec.z_prime, params.channel, seed);
  const double beta = DefaultBeta(params);
  rec.beta = beta;
  // Negative beta (negative h) flips the received signal before the
  // positive rescaling.
  rec.z_hat = beta > 0.0 ? ServerPostprocess(rec.y, beta)
                         : ServerPostprocess(-rec.y, -beta);
  rec.f_hat = Decode(decoder, rec.z_hat, beta).f_hat;
  const double gain = beta * params.channel.h * params.channel.alpha;
  Require(gain != 0.0, ErrorCode::kDegenerate, "end-to-end gain is zero");
  rec.z_error2 = (rec.z_hat / gain - rec.z).squaredNorm();
  rec.f_error2 = (rec.f_hat - rec.f).squaredNorm();
  return rec;
}

}  // namespace featpriv
