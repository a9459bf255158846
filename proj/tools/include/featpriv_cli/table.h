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

#ifndef FEATPRIV_CLI_TABLE_H_
#define FEATPRIV_CLI_TABLE_H_

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace featpriv::cli {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void AddRow(std::vector<Cell> row);
};

enum class OutputFormat { kCsv, kJson };

// Shortest decimal string that round-trips to the same double. NaN is
// "nan", infinities are "inf" / "-inf".
std::string FormatNumber(double value);

// CSV: header line then one line per row, LF endings.
void WriteCsv(const Table& table, std::ostream& out);
// JSON: array of objects with the CSV column names; NaN and inf become null.
void WriteJson(const Table& table, std::ostream& out);
void WriteTable(const Table& table, OutputFormat format, std::ostream& out);

}  // namespace featpriv::cli

#endif  // FEATPRIV_CLI_TABLE_H_
