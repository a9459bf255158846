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

#include "featpriv/randmat.h"

#include <cmath>
#include <limits>
#include <string>

#include "featpriv/error.h"
#include "featpriv/rng.h"

namespace featpriv {

EncoderMatrix SampleEncoder(int rows, int cols, double scale,
                            std::uint64_t seed) {
  Require(rows >= 1 && cols >= 1, ErrorCode::kDimension,
          "encoder dimensions must be positive");
  Require(rows <= cols, ErrorCode::kDimension,
          "encoder needs r <= d, got r=" + std::to_string(rows) +
              " d=" + std::to_string(cols));
  Require(scale > 0.0 && std::isfinite(scale), ErrorCode::kParameter,
          "Laplace scale b must be positive");
  EncoderMatrix out;
  out.scale = scale;
  out.seed = seed;
  out.entries.resize(rows, cols);
  RandomStream stream(seed, StreamTag::kEncoder);
  // Row-major fill so that the first rows of a taller draw match.
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out.entries(i, j) = stream.Laplace(scale);
  }
  return out;
}

double SpectralNorm(const Matrix& m) {
  Require(m.size() > 0, ErrorCode::kDimension,
          "spectral norm of an empty matrix");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double SmallestSingularValue(const Matrix& m) {
  Require(m.size() > 0, ErrorCode::kDimension,
          "singular values of an empty matrix");
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  return s(s.size() - 1);
}

SpectralBound ComputeSpectralBound(int rows, int cols, double scale,
                                   double delta) {
  Require(rows >= 1 && cols >= 1, ErrorCode::kDimension,
          "spectral bound needs positive dimensions");
  Require(delta > 0.0 && delta < 1.0, ErrorCode::kParameter,
          "delta must lie in (0, 1)");
  Require(scale > 0.0, ErrorCode::kParameter, "Laplace scale b must be positive");
  const double root_sum = std::sqrt(static_cast<double>(rows)) +
                          std::sqrt(static_cast<double>(cols));
  SpectralBound out;
  out.c_w = 4.0 * (1.0 + std::log(2.0 / delta) / root_sum);
  out.norm_bound = out.c_w * scale * root_sum;
  out.fail_prob = delta;
  return out;
}

Matrix Pseudoinverse(const Matrix& m, double tol) {
  if (m.size() == 0) return Matrix(m.cols(), m.rows());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (tol < 0.0) {
    tol = std::numeric_limits<double>::epsilon() *
          static_cast<double>(std::max(m.rows(), m.cols()));
  }
  const double cutoff = tol * s(0);
  Vector inv_s(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    inv_s(i) = (s(i) > cutoff && s(i) > 0.0) ? 1.0 / s(i) : 0.0;
  }
  return svd.matrixV() * inv_s.asDiagonal() * svd.matrixU().transpose();
}

}  // namespace featpriv
