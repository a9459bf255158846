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

#include "featpriv/acquisition.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "featpriv/error.h"
#include "featpriv/rng.h"

namespace featpriv {

const char* TransformKindName(TransformKind kind) {
  switch (kind) {
    case TransformKind::kHadamard:
      return "hadamard";
    case TransformKind::kDct:
      return "dct";
    case TransformKind::kRandomOrthogonal:
      return "random_orthogonal";
  }
  return "unknown";
}

TransformKind ParseTransformKind(std::string_view name) {
  if (name == "hadamard") return TransformKind::kHadamard;
  if (name == "dct") return TransformKind::kDct;
  if (name == "random_orthogonal") return TransformKind::kRandomOrthogonal;
  Fail(ErrorCode::kParameter,
       "unknown transform '" + std::string(name) +
           "' (expected hadamard, dct or random_orthogonal)");
}

Matrix AcquisitionOperator::SensingMatrix() const {
  Matrix a(d(), m_dim());
  for (int i = 0; i < d(); ++i) a.row(i) = transform.row(selection[i]);
  return a;
}

Matrix HadamardTransform(int m_dim) {
  Require(m_dim >= 1 && (m_dim & (m_dim - 1)) == 0, ErrorCode::kParameter,
          "hadamard transform needs a power-of-two size, got " +
              std::to_string(m_dim));
  Matrix h = Matrix::Ones(1, 1);
  while (h.rows() < m_dim) {
    const Eigen::Index n = h.rows();
    Matrix next(2 * n, 2 * n);
    next << h, h, h, -h;
    h = std::move(next);
  }
  return h / std::sqrt(static_cast<double>(m_dim));
}

Matrix DctTransform(int m_dim) {
  Require(m_dim >= 1, ErrorCode::kParameter, "transform size must be positive");
  Matrix t(m_dim, m_dim);
  const double m = static_cast<double>(m_dim);
  for (int k = 0; k < m_dim; ++k) {
    const double c = k == 0 ? std::sqrt(1.0 / m) : std::sqrt(2.0 / m);
    for (int n = 0; n < m_dim; ++n) {
      t(k, n) = c * std::cos(std::numbers::pi * (2.0 * n + 1.0) * k / (2.0 * m));
    }
  }
  return t;
}

Matrix RandomOrthogonalTransform(int m_dim, std::uint64_t seed) {
  Require(m_dim >= 1, ErrorCode::kParameter, "transform size must be positive");
  RandomStream stream(seed, StreamTag::kAcquisitionTransform);
  Matrix g(m_dim, m_dim);
  for (int j = 0; j < m_dim; ++j) {
    for (int i = 0; i < m_dim; ++i) g(i, j) = stream.Gaussian();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(m_dim, m_dim);
  const Matrix& r = qr.matrixQR();
  // Sign fix makes Q Haar distributed.
  for (int j = 0; j < m_dim; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

AcquisitionOperator BuildAcquisition(int m_dim, int d, TransformKind kind,
                                     double sigma_w2, std::uint64_t seed) {
  Require(d >= 1 && d <= m_dim, ErrorCode::kDimension,
          "acquisition needs 1 <= d <= m_dim, got d=" + std::to_string(d) +
              " m_dim=" + std::to_string(m_dim));
  Require(sigma_w2 >= 0.0, ErrorCode::kParameter,
          "sigma_w2 must be non-negative");
  AcquisitionOperator op;
  switch (kind) {
    case TransformKind::kHadamard:
      op.transform = HadamardTransform(m_dim);
      break;
    case TransformKind::kDct:
      op.transform = DctTransform(m_dim);
      break;
    case TransformKind::kRandomOrthogonal:
      op.transform = RandomOrthogonalTransform(m_dim, seed);
      break;
  }
  // Partial Fisher-Yates: the first d slots are a uniform sample without
  // replacement.
  std::vector<int> pool(m_dim);
  std::iota(pool.begin(), pool.end(), 0);
  RandomStream stream(seed, StreamTag::kAcquisitionSelect);
  for (int i = 0; i < d; ++i) {
    const auto j = i + static_cast<int>(stream.Below(m_dim - i));
    std::swap(pool[i], pool[j]);
  }
  op.selection.assign(pool.begin(), pool.begin() + d);
  op.sigma_w2 = sigma_w2;
  return op;
}

Vector Acquire(const AcquisitionOperator& op, const Vector& x,
               std::uint64_t seed) {
  Require(x.size() == op.m_dim(), ErrorCode::kDimension,
          "acquire: signal length must equal m_dim");
  Vector f(op.d());
  for (int i = 0; i < op.d(); ++i) f(i) = op.transform.row(op.selection[i]).dot(x);
  if (op.sigma_w2 > 0.0) {
    RandomStream stream(seed, StreamTag::kAcquisitionNoise);
    const double sd = std::sqrt(op.sigma_w2);
    for (int i = 0; i < op.d(); ++i) f(i) += sd * stream.Gaussian();
  }
  return f;
}

Vector InvertAcquisition(const AcquisitionOperator& op, const Vector& f_hat) {
  Require(f_hat.size() == op.d(), ErrorCode::kDimension,
          "invert: feature length must equal d");
  Vector filled = Vector::Zero(op.m_dim());
  for (int i = 0; i < op.d(); ++i) filled(op.selection[i]) = f_hat(i);
  return op.transform.transpose() * filled;
}

Matrix SampledSubspaceProjector(const AcquisitionOperator& op) {
  const Matrix a = op.SensingMatrix();
  return a.transpose() * a;
}

}  // namespace featpriv
