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

#include "featpriv_cli/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "featpriv/error.h"

namespace featpriv::cli {
namespace {

std::string_view Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void Invalid(const std::string& key, const std::string& value,
                          const std::string& expected) {
  throw ConfigError("invalid " + key + "='" + value + "': expected " +
                    expected);
}

double ToDouble(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = first + value.size();
  if (!value.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc() || res.ptr != last || value.empty()) {
    Invalid(key, value, "a number");
  }
  return out;
}

long long ToInteger(const std::string& key, const std::string& value) {
  // Accept "1e4" style integers.
  const double v = ToDouble(key, value);
  if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 9.0e15) {
    Invalid(key, value, "an integer");
  }
  return static_cast<long long>(v);
}

int ToInt(const std::string& key, const std::string& value) {
  const long long v = ToInteger(key, value);
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    Invalid(key, value, "an integer in int range");
  }
  return static_cast<int>(v);
}

std::int64_t ToSeed(const std::string& key, const std::string& value) {
  std::int64_t out = 0;
  const char* last = value.data() + value.size();
  const auto res = std::from_chars(value.data(), last, out);
  if (res.ec != std::errc() || res.ptr != last || value.empty()) {
    Invalid(key, value, "a 64-bit integer");
  }
  return out;
}

struct Pending {
  std::string beta_mode = "perfect_csi";
  bool csi_error_set = false;
};

using Setter = std::function<void(ExperimentConfig&, Pending&,
                                  const std::string& key, const std::string&)>;

const std::map<std::string, Setter>& Setters() {
  static const auto* setters = new std::map<std::string, Setter>{
      {"d", [](auto& c, auto&, auto& k, auto& v) { c.d = ToInt(k, v); }},
      {"r", [](auto& c, auto&, auto& k, auto& v) { c.r = ToInt(k, v); }},
      {"m_dim", [](auto& c, auto&, auto& k, auto& v) { c.m_dim = ToInt(k, v); }},
      {"M", [](auto& c, auto&, auto& k, auto& v) { c.antennas = ToInteger(k, v); }},
      {"epsilon", [](auto& c, auto&, auto& k, auto& v) { c.epsilon = ToDouble(k, v); }},
      {"delta", [](auto& c, auto&, auto& k, auto& v) { c.delta = ToDouble(k, v); }},
      {"b", [](auto& c, auto&, auto& k, auto& v) { c.b = ToDouble(k, v); }},
      {"C_f", [](auto& c, auto&, auto& k, auto& v) { c.clip_norm = ToDouble(k, v); }},
      {"sigma2", [](auto& c, auto&, auto& k, auto& v) { c.sigma2 = ToDouble(k, v); }},
      {"P_dbm", [](auto& c, auto&, auto& k, auto& v) { c.p_dbm = ToDouble(k, v); }},
      {"alpha", [](auto& c, auto&, auto& k, auto& v) { c.alpha = ToDouble(k, v); }},
      {"h", [](auto& c, auto&, auto& k, auto& v) { c.h = ToDouble(k, v); }},
      {"g", [](auto& c, auto&, auto& k, auto& v) { c.g = ToDouble(k, v); }},
      {"sigma_m2", [](auto& c, auto&, auto& k, auto& v) { c.sigma_m2 = ToDouble(k, v); }},
      {"sigma_a2", [](auto& c, auto&, auto& k, auto& v) { c.sigma_a2 = ToDouble(k, v); }},
      {"sigma_w2", [](auto& c, auto&, auto& k, auto& v) { c.sigma_w2 = ToDouble(k, v); }},
      {"omega", [](auto& c, auto&, auto& k, auto& v) { c.omega = ToDouble(k, v); }},
      {"c_z2", [](auto& c, auto&, auto& k, auto& v) { c.c_z2 = ToDouble(k, v); }},
      {"r_max", [](auto& c, auto&, auto& k, auto& v) { c.r_max = ToInt(k, v); }},
      {"trials", [](auto& c, auto&, auto& k, auto& v) { c.trials = ToInt(k, v); }},
      {"master_seed",
       [](auto& c, auto&, auto& k, auto& v) {
         c.master_seed = static_cast<std::uint64_t>(ToSeed(k, v));
       }},
      {"threads", [](auto& c, auto&, auto& k, auto& v) { c.threads = ToInt(k, v); }},
      {"decoder",
       [](auto&, auto&, auto& k, auto& v) {
         if (v != "pseudoinverse") Invalid(k, v, "pseudoinverse");
       }},
      {"beta_mode",
       [](auto&, auto& p, auto& k, auto& v) {
         if (v != "perfect_csi" && v != "perturbed") {
           Invalid(k, v, "perfect_csi or perturbed");
         }
         p.beta_mode = v;
       }},
      {"csi_error",
       [](auto& c, auto& p, auto& k, auto& v) {
         c.csi_error = ToDouble(k, v);
         p.csi_error_set = true;
       }},
      {"gamma", [](auto& c, auto&, auto& k, auto& v) { c.gamma = ToDouble(k, v); }},
      {"features",
       [](auto& c, auto&, auto& k, auto& v) {
         try {
           c.features = ParseFeatureSource(v);
         } catch (const Error&) {
           Invalid(k, v, "margin_task, sphere or acquisition");
         }
       }},
      {"margin", [](auto& c, auto&, auto& k, auto& v) { c.margin = ToDouble(k, v); }},
      {"p_flip", [](auto& c, auto&, auto& k, auto& v) { c.p_flip = ToDouble(k, v); }},
      {"signal_norm",
       [](auto& c, auto&, auto& k, auto& v) { c.signal_norm = ToDouble(k, v); }},
      {"transform",
       [](auto& c, auto&, auto& k, auto& v) {
         try {
           c.transform = ParseTransformKind(v);
         } catch (const Error&) {
           Invalid(k, v, "hadamard, dct or random_orthogonal");
         }
       }},
      {"fading",
       [](auto& c, auto&, auto& k, auto& v) {
         try {
           c.fading = ParseFadingLaw(v);
         } catch (const Error&) {
           Invalid(k, v, "half_normal or rayleigh");
         }
       }},
      {"transfer_c",
       [](auto& c, auto&, auto& k, auto& v) { c.transfer_c = ToDouble(k, v); }},
      {"transfer_t",
       [](auto& c, auto&, auto& k, auto& v) { c.transfer_t = ToDouble(k, v); }},
  };
  return *setters;
}

struct Entry {
  std::string key;
  std::string value;
  std::string origin;
};

Entry SplitPair(std::string_view line, const std::string& origin) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError(origin + ": expected key=value, got '" +
                      std::string(line) + "'");
  }
  Entry e{std::string(Trim(line.substr(0, eq))),
          std::string(Trim(line.substr(eq + 1))), origin};
  if (e.key.empty()) throw ConfigError(origin + ": empty key");
  if (!Setters().contains(e.key)) {
    throw ConfigError(origin + ": unknown key '" + e.key + "'");
  }
  return e;
}

}  // namespace

const std::vector<std::string>& KnownKeys() {
  static const auto* keys = [] {
    auto* out = new std::vector<std::string>;
    for (const auto& [k, _] : Setters()) out->push_back(k);
    return out;
  }();
  return *keys;
}

ParsedConfig ParseConfigText(std::string_view text,
                             const std::vector<std::string>& overrides) {
  std::vector<Entry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    entries.push_back(SplitPair(line, "line " + std::to_string(line_no)));
  }
  for (const auto& o : overrides) {
    entries.push_back(SplitPair(Trim(o), "--set " + o));
  }

  ParsedConfig out;
  std::map<std::string, std::string> seen;
  Pending pending;
  for (const auto& e : entries) {
    if (auto it = seen.find(e.key); it != seen.end()) {
      out.warnings.push_back("duplicate key '" + e.key + "' (" + it->second +
                             ", " + e.origin + "); last occurrence wins");
    }
    seen[e.key] = e.origin;
    Setters().at(e.key)(out.config, pending, e.key, e.value);
  }
  if (pending.beta_mode == "perfect_csi" && pending.csi_error_set &&
      out.config.csi_error != 0.0) {
    throw ConfigError(
        "invalid csi_error: must be 0 unless beta_mode=perturbed");
  }
  try {
    out.config.Validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return out;
}

ParsedConfig ParseConfig(const std::string& path,
                         const std::vector<std::string>& overrides) {
  if (path.empty()) return ParseConfigText({}, overrides);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfigText(buf.str(), overrides);
}

}  // namespace featpriv::cli
