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

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "featpriv/error.h"
#include "featpriv/stats.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace featpriv {
namespace {

using ::featpriv::testing::RandomGaussianVector;
using ::featpriv::testing::RelativeError;

double OrthogonalityResidual(const Matrix& t) {
  return (t.transpose() * t - Matrix::Identity(t.rows(), t.cols()))
      .cwiseAbs()
      .maxCoeff();
}

TEST(TransformTest, HadamardEntries) {
  const Matrix h = HadamardTransform(8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      EXPECT_NEAR(std::abs(h(i, j)), 1 / std::sqrt(8.0), 1e-15);
    }
  }
  EXPECT_LT(OrthogonalityResidual(h), 1e-12);
  EXPECT_THROW(HadamardTransform(12), Error);
}

TEST(TransformTest, AllKindsOrthogonal) {
  EXPECT_LT(OrthogonalityResidual(DctTransform(30)), 1e-12);
  EXPECT_LT(OrthogonalityResidual(RandomOrthogonalTransform(16, 3)), 1e-12);
  EXPECT_TRUE(RandomOrthogonalTransform(16, 3) == RandomOrthogonalTransform(16, 3));
  EXPECT_FALSE(RandomOrthogonalTransform(16, 3) == RandomOrthogonalTransform(16, 4));
}

TEST(TransformTest, NamesRoundTrip) {
  for (TransformKind k : {TransformKind::kHadamard, TransformKind::kDct,
                          TransformKind::kRandomOrthogonal}) {
    EXPECT_EQ(ParseTransformKind(TransformKindName(k)), k);
  }
  EXPECT_THROW(ParseTransformKind("dft"), Error);
}

TEST(BuildAcquisitionTest, SelectionIsDistinct) {
  const AcquisitionOperator op =
      BuildAcquisition(64, 20, TransformKind::kDct, 0.0, 5);
  EXPECT_EQ(op.d(), 20);
  EXPECT_EQ(op.m_dim(), 64);
  const std::set<int> unique(op.selection.begin(), op.selection.end());
  EXPECT_EQ(unique.size(), 20u);
  EXPECT_GE(*unique.begin(), 0);
  EXPECT_LT(*unique.rbegin(), 64);
}

TEST(BuildAcquisitionTest, FullSamplingIsPermutation) {
  const AcquisitionOperator op =
      BuildAcquisition(16, 16, TransformKind::kHadamard, 0.0, 5);
  std::vector<int> sorted = op.selection;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 16; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(BuildAcquisitionTest, SelectionIsUniform) {
  // Each row should be picked with probability d / m.
  std::vector<int> counts(10, 0);
  const int reps = 20000;
  for (int s = 0; s < reps; ++s) {
    const AcquisitionOperator op =
        BuildAcquisition(10, 3, TransformKind::kDct, 0.0, s);
    for (int idx : op.selection) ++counts[idx];
  }
  const double p = 0.3;
  const double sd = std::sqrt(reps * p * (1 - p));
  for (int c : counts) EXPECT_LT(std::abs(c - reps * p), 5 * sd);
}

TEST(BuildAcquisitionTest, Errors) {
  EXPECT_THROW(BuildAcquisition(8, 9, TransformKind::kDct, 0.0, 1), Error);
  EXPECT_THROW(BuildAcquisition(12, 4, TransformKind::kHadamard, 0.0, 1), Error);
  EXPECT_THROW(BuildAcquisition(8, 4, TransformKind::kDct, -1.0, 1), Error);
}

TEST(AcquireTest, EnergyPreservedUnderFullSampling) {
  RandomStream stream(6);
  for (TransformKind kind : {TransformKind::kHadamard, TransformKind::kDct,
                             TransformKind::kRandomOrthogonal}) {
    const AcquisitionOperator op = BuildAcquisition(32, 32, kind, 0.0, 9);
    const Vector x = RandomGaussianVector(stream, 32);
    EXPECT_NEAR(Acquire(op, x, 1).norm(), x.norm(), 1e-10);
    EXPECT_EQ(Acquire(op, Vector::Zero(32), 1).norm(), 0.0);
    EXPECT_LT((InvertAcquisition(op, Acquire(op, x, 1)) - x).norm(), 1e-10);
  }
}

TEST(AcquireTest, NoiseVariance) {
  const AcquisitionOperator op =
      BuildAcquisition(16, 4, TransformKind::kDct, 0.05, 2);
  const Vector x = Vector::LinSpaced(16, -1, 1);
  const Vector clean = op.SensingMatrix() * x;
  std::vector<double> residual;
  for (long s = 0; s < 100000; ++s) {
    residual.push_back(Acquire(op, x, s)(2) - clean(2));
  }
  EXPECT_LT(RelativeError(Summarize(residual).variance, 0.05), 0.02);
  EXPECT_THROW(Acquire(op, Vector::Zero(15), 1), Error);
}

TEST(InvertAcquisitionTest, IsometryAndZero) {
  const AcquisitionOperator op =
      BuildAcquisition(64, 20, TransformKind::kRandomOrthogonal, 0.0, 3);
  EXPECT_EQ(InvertAcquisition(op, Vector::Zero(20)).norm(), 0.0);
  RandomStream stream(7);
  for (int i = 0; i < 200; ++i) {
    const Vector a = RandomGaussianVector(stream, 20);
    const Vector b = RandomGaussianVector(stream, 20);
    const double lhs = (InvertAcquisition(op, a) - InvertAcquisition(op, b)).norm();
    EXPECT_NEAR(lhs, (a - b).norm(), 1e-12 * (1 + lhs));
  }
  EXPECT_THROW(InvertAcquisition(op, Vector::Zero(21)), Error);
}

TEST(InvertAcquisitionTest, RoundTripIsProjection) {
  const AcquisitionOperator op =
      BuildAcquisition(32, 10, TransformKind::kDct, 0.0, 8);
  const Matrix proj = SampledSubspaceProjector(op);
  EXPECT_LT((proj * proj - proj).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((proj - proj.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(proj.trace(), 10.0, 1e-10);
  RandomStream stream(8);
  const Vector x = RandomGaussianVector(stream, 32);
  EXPECT_LT((InvertAcquisition(op, Acquire(op, x, 0)) - proj * x).norm(), 1e-10);
}

TEST(InvertAcquisitionTest, PythagoreanErrorSplit) {
  RandomStream stream(9);
  for (int i = 0; i < 1000; ++i) {
    const AcquisitionOperator op =
        BuildAcquisition(32, 12, TransformKind::kHadamard, 0.0, 1000 + i);
    const Matrix proj = SampledSubspaceProjector(op);
    const Vector x = RandomGaussianVector(stream, 32);
    const Vector f = Acquire(op, x, i);
    const Vector f_hat = f + RandomGaussianVector(stream, 12, 0.3);
    const Vector x_hat = InvertAcquisition(op, f_hat);
    const double lhs = (x_hat - x).squaredNorm();
    const double rhs =
        (f_hat - f).squaredNorm() + (x - proj * x).squaredNorm();
    ASSERT_NEAR(lhs, rhs, 1e-9 * (1 + lhs));
    ASSERT_GE((x_hat - x).norm(), (f_hat - f).norm() * (1 - 1e-12));
  }
}

}  // namespace
}  // namespace featpriv
