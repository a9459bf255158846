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

#include "featpriv/privacy.h"

#include <cmath>

#include "featpriv/error.h"
#include "featpriv/randmat.h"
#include "featpriv/rng.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace featpriv {
namespace {

using ::featpriv::testing::RandomGaussianVector;

// Independent evaluation of the calibration formula.
double OracleSigma2(double eps, double delta, int r, int d, double b,
                    double cf) {
  const double s = std::sqrt(r) + std::sqrt(d);
  const double cw = 4.0 * (1.0 + std::log(2.0 / delta) / s);
  return 8.0 * cw * cw * b * b * cf * cf * (r + d) * std::log(1.25 / delta) /
         (eps * eps);
}

TEST(CalibrateTest, ReferenceParameters) {
  const NoiseCalibration cal = Calibrate({1.0, 1e-5}, 10, 50, 0.01, 2.0);
  EXPECT_NEAR(cal.c_w, 8.771097654774767, 1e-12);
  EXPECT_NEAR(cal.sigma2, 173.35316538858228, 1e-9 * 173.35316538858228);
  EXPECT_NEAR(cal.d_z, 1.7951534494051227, 1e-13);
  EXPECT_NEAR(cal.sensitivity, 2.0 * cal.d_z, 1e-13);
  EXPECT_NEAR(std::log(1.25 / 1e-5), 11.736069016284437, 1e-12);
}

TEST(CalibrateTest, EpsilonScaling) {
  const NoiseCalibration base = Calibrate({1.0, 1e-5}, 10, 50, 0.01, 2.0);
  const NoiseCalibration quad = Calibrate({4.0, 1e-5}, 10, 50, 0.01, 2.0);
  EXPECT_NEAR(quad.sigma2, base.sigma2 / 16.0, 1e-12 * base.sigma2);
  EXPECT_EQ(quad.c_w, base.c_w);
  EXPECT_EQ(quad.d_z, base.d_z);
  EXPECT_EQ(quad.sensitivity, base.sensitivity);
  const NoiseCalibration huge = Calibrate({1e12, 1e-5}, 10, 50, 0.01, 2.0);
  EXPECT_LT(huge.sigma2, 1e-20);
}

TEST(CalibrateTest, RejectsBadBudget) {
  for (const PrivacyBudget& bad :
       {PrivacyBudget{0.0, 1e-5}, PrivacyBudget{-1.0, 1e-5},
        PrivacyBudget{1.0, 0.0}, PrivacyBudget{1.0, 1.0}}) {
    try {
      Calibrate(bad, 10, 50, 0.01, 2.0);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParameter);
    }
  }
  EXPECT_THROW(Calibrate({1.0, 1e-5}, 60, 50, 0.01, 2.0), Error);
}

TEST(SensitivityTest, Values) {
  EXPECT_DOUBLE_EQ(SensitivityBound(1.0, 1.0), 2.0);
  EXPECT_NEAR(SensitivityBound(2.0, 0.89756), 3.59024, 1e-12);
}

TEST(SensitivityTest, BruteForcePairsStayBelowBound) {
  const double cf = 2.0;
  const EncoderMatrix w = SampleEncoder(10, 50, 0.01, 3);
  const SpectralBound sb = ComputeSpectralBound(10, 50, 0.01, 1e-5);
  ASSERT_LE(SpectralNorm(w.entries), sb.norm_bound);
  const double bound = SensitivityBound(cf, sb.norm_bound);
  RandomStream stream(4);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Vector diff = RandomGaussianVector(stream, 50).normalized() * 2.0 * cf;
    worst = std::max(worst, (w.entries * diff).norm());
  }
  EXPECT_LE(worst, bound);
}

TEST(SigmaFromSensitivityTest, Values) {
  EXPECT_NEAR(SigmaFromSensitivity(1.0, {1.0, 1.25 / std::exp(1.0)}), 2.0,
              1e-14);
  const PrivacyBudget budget{0.7, 1e-4};
  EXPECT_NEAR(SigmaFromSensitivity(2.0, budget),
              4.0 * SigmaFromSensitivity(1.0, budget), 1e-12);
  EXPECT_THROW(SigmaFromSensitivity(0.0, budget), Error);
}

TEST(PrivacyPropertyTest, CalibrationBracketsGaussianMechanism) {
  RandomStream stream(77);
  for (int i = 0; i < 100; ++i) {
    const int d = 1 + static_cast<int>(stream.Below(200));
    const int r = 1 + static_cast<int>(stream.Below(d));
    const PrivacyBudget budget{0.05 + 10 * stream.Uniform(),
                               std::pow(10.0, -1 - 7 * stream.Uniform())};
    const double b = 0.001 + stream.Uniform();
    const double cf = 0.1 + 10 * stream.Uniform();
    const NoiseCalibration cal = Calibrate(budget, r, d, b, cf);
    const double mech = SigmaFromSensitivity(cal.sensitivity, budget);
    // r + d <= (sqrt(r) + sqrt(d))^2 <= 2 (r + d) pins the mechanism's
    // variance between sigma2 and 2 sigma2.
    EXPECT_GE(mech, cal.sigma2 * (1 - 1e-12));
    EXPECT_LE(mech, 2 * cal.sigma2 * (1 + 1e-12));
    EXPECT_NEAR(cal.sigma2, OracleSigma2(budget.epsilon, budget.delta, r, d, b, cf),
                1e-12 * cal.sigma2);
    EXPECT_LE(cal.sensitivity,
              2 * cf * cal.c_w * b * (std::sqrt(r) + std::sqrt(d)) * (1 + 1e-15));
  }
}

TEST(PrivacyPropertyTest, MonotoneInEveryParameter) {
  const PrivacyBudget budget{1.0, 1e-5};
  const double base = Calibrate(budget, 10, 50, 0.01, 2.0).sigma2;
  EXPECT_LT(Calibrate({1.1, 1e-5}, 10, 50, 0.01, 2.0).sigma2, base);
  EXPECT_GT(Calibrate(budget, 10, 50, 0.011, 2.0).sigma2, base);
  EXPECT_GT(Calibrate(budget, 10, 50, 0.01, 2.1).sigma2, base);
  EXPECT_GT(Calibrate(budget, 11, 50, 0.01, 2.0).sigma2, base);
  EXPECT_GT(Calibrate(budget, 10, 51, 0.01, 2.0).sigma2, base);
}

TEST(PrivacyPropertyTest, LatentBoundHolds) {
  const int r = 10, d = 50;
  const double b = 0.01, cf = 2.0;
  const NoiseCalibration cal = Calibrate({1.0, 1e-5}, r, d, b, cf);
  RandomStream stream(12);
  for (int i = 0; i < 10000; ++i) {
    const EncoderMatrix w = SampleEncoder(r, d, b, 5000 + i);
    if (SpectralNorm(w.entries) > cal.norm_bound) continue;
    const Vector f = RandomGaussianVector(stream, d).normalized() *
                     (cf * stream.Uniform());
    ASSERT_LE((w.entries * f).norm(), cal.d_z);
  }
}

}  // namespace
}  // namespace featpriv
