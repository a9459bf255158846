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

#ifndef FEATPRIV_RANDMAT_H_
#define FEATPRIV_RANDMAT_H_

#include <cstdint>

#include "featpriv/linalg.h"

namespace featpriv {

// Random projection encoder with i.i.d. Laplace(0, scale) entries.
struct EncoderMatrix {
  Matrix entries;
  double scale = 0.0;
  std::uint64_t seed = 0;

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
};

// High-probability bound on the spectral norm of an r x d Laplace matrix:
// norm_bound = c_w * b * (sqrt(r) + sqrt(d)) with
// c_w = 4 * (1 + ln(2 / delta) / (sqrt(r) + sqrt(d))).
struct SpectralBound {
  double c_w = 0.0;
  double norm_bound = 0.0;
  double fail_prob = 0.0;
};

// Requires 1 <= rows <= cols and scale > 0. Deterministic in `seed`.
EncoderMatrix SampleEncoder(int rows, int cols, double scale,
                            std::uint64_t seed);

// Largest singular value (Jacobi SVD).
double SpectralNorm(const Matrix& m);

// Smallest singular value among the min(rows, cols) singular values.
double SmallestSingularValue(const Matrix& m);

SpectralBound ComputeSpectralBound(int rows, int cols, double scale,
                                   double delta);

// Moore-Penrose pseudoinverse. Singular values below tol * sigma_max are
// treated as zero; a negative tol selects eps * max(rows, cols).
Matrix Pseudoinverse(const Matrix& m, double tol = -1.0);

}  // namespace featpriv

#endif  // FEATPRIV_RANDMAT_H_
