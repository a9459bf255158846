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

#ifndef FEATPRIV_TESTS_TEST_UTIL_H_
#define FEATPRIV_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>

#include "featpriv/linalg.h"
#include "featpriv/rng.h"

namespace featpriv::testing {

inline Vector RandomGaussianVector(RandomStream& stream, int n,
                                   double scale = 1.0) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = scale * stream.Gaussian();
  return v;
}

inline Matrix RandomGaussianMatrix(RandomStream& stream, int rows, int cols) {
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = stream.Gaussian();
  }
  return m;
}

// Power iteration on M^T M; independent of the SVD used by the library.
inline double PowerIterationNorm(const Matrix& m, int iterations = 5000) {
  Vector v = Vector::Ones(m.cols()).normalized();
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Vector w = m.transpose() * (m * v);
    const double next = w.norm();
    if (next == 0.0) return 0.0;
    v = w / next;
    if (std::abs(next - lambda) <= 1e-15 * next) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

inline double RelativeError(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace featpriv::testing

#endif  // FEATPRIV_TESTS_TEST_UTIL_H_
