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

#include "featpriv/stats.h"

#include <cmath>
#include <limits>

namespace featpriv {
namespace {

constexpr double kZ975 = 1.959963984540054;

// Neumaier summation.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double Value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace

double MetricSummary::StandardError() const {
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(variance / static_cast<double>(n));
}

MetricSummary Summarize(std::span<const double> samples) {
  MetricSummary out;
  CompensatedSum sum;
  for (double x : samples) {
    if (std::isnan(x)) continue;
    sum.Add(x);
    ++out.n;
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (out.n == 0) {
    out.mean = out.variance = out.ci95_low = out.ci95_high = nan;
    return out;
  }
  out.mean = sum.Value() / static_cast<double>(out.n);
  CompensatedSum squares;
  for (double x : samples) {
    if (std::isnan(x)) continue;
    const double dev = x - out.mean;
    squares.Add(dev * dev);
  }
  out.variance =
      out.n > 1 ? squares.Value() / static_cast<double>(out.n - 1) : 0.0;
  if (out.n < kMinTrialsForInterval) {
    out.ci95_low = out.ci95_high = nan;
  } else {
    const double half = kZ975 * out.StandardError();
    out.ci95_low = out.mean - half;
    out.ci95_high = out.mean + half;
  }
  return out;
}

double BinomialUpperTail(long n, long k, double p) {
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double tail = 0.0;
  for (long i = k; i <= n; ++i) {
    const double log_term = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                            std::lgamma(n - i + 1.0) + i * log_p +
                            (n - i) * log_q;
    tail += std::exp(log_term);
  }
  return tail > 1.0 ? 1.0 : tail;
}

}  // namespace featpriv
