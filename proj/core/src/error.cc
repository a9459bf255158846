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

#include "featpriv/error.h"

namespace featpriv {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimension:
      return "dimension";
    case ErrorCode::kParameter:
      return "parameter";
    case ErrorCode::kInfeasible:
      return "infeasible";
    case ErrorCode::kDegenerate:
      return "degenerate";
    case ErrorCode::kRegime:
      return "regime";
  }
  return "unknown";
}

}  // namespace featpriv
