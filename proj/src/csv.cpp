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

#include "cqm/csv.hpp"

#include <charconv>
#include <fstream>

#include "cqm/errors.hpp"

namespace cqm {

std::string format_value(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const std::vector<CsvColumn>& columns) {
  if (columns.empty()) throw IoError("csv: no columns to write");
  const std::size_t n = columns.front().values->size();
  for (const auto& c : columns) {
    if (c.values->size() != n) throw IoError("csv: column length mismatch");
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("csv: cannot open '" + path + "' for writing");

  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out << ',';
    out << columns[c].name;
  }
  out << '\n';
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      out << format_value((*columns[c].values)[row]);
    }
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("csv: write to '" + path + "' failed");
}

}  // namespace cqm
