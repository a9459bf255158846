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

#ifndef FEATPRIV_CLI_COMMANDS_H_
#define FEATPRIV_CLI_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "featpriv/harness.h"
#include "featpriv_cli/table.h"

namespace featpriv::cli {

// The fixed sweep schema.
inline constexpr const char* kSweepHeader =
    "axis_value,sigma2,c_w,d_z,nu2,bound_adv,gamma_star,mse_adv_emp,"
    "mse_server_emp,bound_server,acc_emp,acc_bound,ci95_mse_adv";

enum class Subcommand {
  kCalibrate,
  kBound,
  kSimulate,
  kSweep,
  kDimension,
  kMimo,
  kAcquireDemo,
};

const char* SubcommandName(Subcommand cmd);

struct Invocation {
  Subcommand subcommand = Subcommand::kCalibrate;
  std::string config_path;
  std::vector<std::string> overrides;
  OutputFormat output = OutputFormat::kCsv;
  std::string out_path;  // empty writes to stdout
  std::optional<std::int64_t> seed;
  std::optional<int> trials;
  // sweep / mimo
  std::string axis = "epsilon";
  std::vector<double> values;  // empty selects the preset grid
  MseSource mse_source = MseSource::kConservative;
};

// Builds the result table of one subcommand. Throws featpriv::Error or
// ConfigError.
Table BuildTable(Subcommand cmd, const ExperimentConfig& config,
                 const Invocation& inv);

// Parses, runs and writes. Returns the process exit code: 0 success,
// 1 configuration error, 2 numerical or infeasibility error. Diagnostics go
// to `err`; results go to inv.out_path or `out`.
int Execute(const Invocation& inv, std::ostream& out, std::ostream& err);

// Preset grids used when --values is absent.
std::vector<double> DefaultValues(SweepAxis axis);

}  // namespace featpriv::cli

#endif  // FEATPRIV_CLI_COMMANDS_H_
