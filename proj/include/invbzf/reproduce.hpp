// Copyright 2026 The invbzf Authors
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


// Cell-by-cell comparison of computed values with the reference tables.
// Table ids: "1" class counts, "2" square-root council targets (needs
// population files), "3"/"4"/"5" grid statistics of the half, q* and q-bar
// heuristics, "opt" unavoidable deviations, "6"/"7" the (2,...,2,1) family in
// d1 and dinf.

#ifndef INVBZF_REPRODUCE_HPP_
#define INVBZF_REPRODUCE_HPP_

#include <string>
#include <vector>

namespace invbzf {

enum class CellStatus { kPass, kFail, kSkipped };
std::string to_string(CellStatus s);  // "pass", "FAIL", "skipped"

struct Cell {
  std::string table;
  int n = 0;
  std::string column;
  std::string expected;  // as printed
  std::string actual;    // "" when skipped
  double tolerance = 0;
  CellStatus status = CellStatus::kSkipped;
  std::string note;
};

struct ReproduceOptions {
  int max_stats_n = 5;  // grid statistics rows computed up to this n
  int max_count_n = 7;  // class counts up to this n (and the enumeration limits)
  // Directory with eu<year>.csv population files; "" skips table 2.
  std::string data_dir;
  int threads = 0;
};

const std::vector<std::string>& reproducible_tables();

// Throws std::invalid_argument for an unknown table id.
std::vector<Cell> reproduce_table(const std::string& table, const ReproduceOptions& options = {});

// table,n,column,expected,actual,tolerance,status,note
std::string cells_to_csv(const std::vector<Cell>& cells);
bool any_failed(const std::vector<Cell>& cells);

}  // namespace invbzf

#endif  // INVBZF_REPRODUCE_HPP_
