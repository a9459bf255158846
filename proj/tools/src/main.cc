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

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "featpriv_cli/commands.h"

namespace {

using featpriv::cli::Invocation;
using featpriv::cli::Subcommand;

std::vector<double> ParseValueList(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private feature transmission over fading channels: noise "
               "calibration, adversarial bounds and Monte Carlo validation."};
  app.require_subcommand(1);

  Invocation inv;
  std::string output = "csv";
  std::string values;
  std::string mse_source = "conservative";
  std::int64_t seed = 0;
  int trials = 0;

  const std::vector<std::pair<Subcommand, std::string>> commands = {
      {Subcommand::kCalibrate, "Privacy noise calibration (C_w, sigma2, sensitivity, D_z)"},
      {Subcommand::kBound, "Closed-form adversary, server and accuracy bounds"},
      {Subcommand::kSimulate, "Monte Carlo trial statistics"},
      {Subcommand::kSweep, "Parameter sweep with closed forms and simulation"},
      {Subcommand::kDimension, "Minimal projection dimension for a target adversary MSE"},
      {Subcommand::kMimo, "Massive-MIMO adversary bound and correlator simulation"},
      {Subcommand::kAcquireDemo, "Subsampled orthogonal acquisition chain"},
  };
  std::vector<std::pair<Subcommand, CLI::App*>> subs;
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(featpriv::cli::SubcommandName(cmd), help);
    sub->add_option("--config", inv.config_path, "key=value config file")
        ->check(CLI::ExistingFile);
    sub->add_option("--set", inv.overrides, "Override KEY=VALUE (repeatable)");
    sub->add_option("--output", output, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", inv.out_path, "Output file (default stdout)");
    sub->add_option("--seed", seed, "Master seed");
    sub->add_option("--trials", trials, "Monte Carlo trials")
        ->check(CLI::PositiveNumber);
    if (cmd == Subcommand::kSweep) {
      sub->add_option("--axis", inv.axis, "Sweep axis")
          ->check(CLI::IsMember({"epsilon", "r", "M", "d", "omega"}));
    }
    if (cmd == Subcommand::kSweep || cmd == Subcommand::kMimo) {
      sub->add_option("--values", values, "Comma-separated axis values");
    }
    if (cmd == Subcommand::kSweep || cmd == Subcommand::kBound) {
      sub->add_option("--mse-source", mse_source,
                      "MSE fed to the accuracy bound")
          ->check(CLI::IsMember({"conservative", "empirical"}));
    }
    subs.emplace_back(cmd, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // Missing config files and bad flag values are configuration errors.
    return code == 0 ? 0 : 1;
  }

  for (const auto& [cmd, sub] : subs) {
    if (!sub->parsed()) continue;
    inv.subcommand = cmd;
    if (sub->count("--seed")) inv.seed = seed;
    if (sub->count("--trials")) inv.trials = trials;
  }
  inv.output = output == "json" ? featpriv::cli::OutputFormat::kJson
                                : featpriv::cli::OutputFormat::kCsv;
  inv.mse_source = mse_source == "empirical" ? featpriv::MseSource::kEmpirical
                                             : featpriv::MseSource::kConservative;
  if (!values.empty()) {
    try {
      inv.values = ParseValueList(values);
    } catch (const std::exception&) {
      std::cerr << "config error: --values must be a comma-separated list of "
                   "numbers\n";
      return 1;
    }
  }
  return featpriv::cli::Execute(inv, std::cout, std::cerr);
}
