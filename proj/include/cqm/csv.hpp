// Copyright 2026 The cqmsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace cqm {

/// One named CSV column. All columns of a table must have equal length.
struct CsvColumn {
  std::string name;
  const std::vector<double>* values;
};

/// Locale-independent formatting of a double with 12 significant digits
/// (std::to_chars, general format).
std::string format_value(double v);

/// Writes `name1,name2,...\n` then one row per sample, each value formatted
/// by format_value. Overwrites the target file. Throws IoError on failure.
void write_csv(const std::string& path, const std::vector<CsvColumn>& columns);

}  // namespace cqm
