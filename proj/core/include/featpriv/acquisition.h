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

#ifndef FEATPRIV_ACQUISITION_H_
#define FEATPRIV_ACQUISITION_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "featpriv/linalg.h"

namespace featpriv {

enum class TransformKind { kHadamard, kDct, kRandomOrthogonal };

const char* TransformKindName(TransformKind kind);
TransformKind ParseTransformKind(std::string_view name);

// Feature extractor f = P_d T x + w: d rows of an orthogonal transform,
// selected without replacement, plus Gaussian measurement noise.
struct AcquisitionOperator {
  Matrix transform;            // m_dim x m_dim, orthogonal
  std::vector<int> selection;  // d distinct row indices
  double sigma_w2 = 0.0;

  int m_dim() const { return static_cast<int>(transform.rows()); }
  int d() const { return static_cast<int>(selection.size()); }

  // The d x m_dim matrix P_d T.
  Matrix SensingMatrix() const;
};

// Orthogonal transforms. Hadamard needs a power-of-two size.
Matrix HadamardTransform(int m_dim);
Matrix DctTransform(int m_dim);
Matrix RandomOrthogonalTransform(int m_dim, std::uint64_t seed);

AcquisitionOperator BuildAcquisition(int m_dim, int d, TransformKind kind,
                                     double sigma_w2, std::uint64_t seed);

Vector Acquire(const AcquisitionOperator& op, const Vector& x,
               std::uint64_t seed);

// T^T P_d^T f_hat: zero-fill the unobserved coefficients and transform back.
Vector InvertAcquisition(const AcquisitionOperator& op, const Vector& f_hat);

// Orthogonal projector onto the span of the selected transform rows.
Matrix SampledSubspaceProjector(const AcquisitionOperator& op);

}  // namespace featpriv

#endif  // FEATPRIV_ACQUISITION_H_
