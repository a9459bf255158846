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

#ifndef FEATPRIV_CLI_CONFIG_H_
#define FEATPRIV_CLI_CONFIG_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "featpriv/harness.h"

namespace featpriv::cli {

// Bad configuration input. Maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedConfig {
  ExperimentConfig config;
  std::vector<std::string> warnings;
};

// Every key accepted in config files and --set overrides.
const std::vector<std::string>& KnownKeys();

// Parses key=value text ('#' starts a comment). Overrides ("key=value") are
// applied after the text. Duplicate keys keep the last occurrence and add a
// warning. The result is validated; violations throw ConfigError naming the
// key.
ParsedConfig ParseConfigText(std::string_view text,
                             const std::vector<std::string>& overrides);

// Reads `path` (empty path means built-in defaults) then applies overrides.
ParsedConfig ParseConfig(const std::string& path,
                         const std::vector<std::string>& overrides);

}  // namespace featpriv::cli

#endif  // FEATPRIV_CLI_CONFIG_H_
