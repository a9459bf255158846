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

#ifndef FEATPRIV_STATS_H_
#define FEATPRIV_STATS_H_

#include <span>

namespace featpriv {

// Trials needed before a normal-approximation interval is reported.
inline constexpr long kMinTrialsForInterval = 30;

struct MetricSummary {
  long n = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
  double ci95_low = 0.0;
  double ci95_high = 0.0;

  double StandardError() const;
  double HalfWidth() const { return 0.5 * (ci95_high - ci95_low); }
};

// Neumaier-compensated mean followed by a two-pass variance. NaN entries are
// skipped (metric not tracked for that trial). Intervals are NaN when
// n < kMinTrialsForInterval.
MetricSummary Summarize(std::span<const double> samples);

// P(X >= k) for X ~ Binomial(n, p).
double BinomialUpperTail(long n, long k, double p);

}  // namespace featpriv

#endif  // FEATPRIV_STATS_H_
