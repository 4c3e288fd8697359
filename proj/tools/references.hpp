// Copyright 2026 The hdbsm Authors
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

#ifndef HDBSM_TOOLS_REFERENCES_HPP
#define HDBSM_TOOLS_REFERENCES_HPP

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hdbsm/classify.hpp"

namespace hdbsm {

struct ReferenceRow {
  int group = 0;
  std::set<std::string> members;
  std::set<Outcome> outcomes;

  friend bool operator==(const ReferenceRow&, const ReferenceRow&) = default;
};

struct ReferenceTable {
  int table = 0;
  Setup setup = Setup::fig1;
  int dim = 4;
  DetectorModel model = DetectorModel::pnrd;
  std::vector<ReferenceRow> rows;
};

/// Parses the references/ JSON schema. Throws std::invalid_argument on
/// schema or label errors.
ReferenceTable parse_reference_table(std::string_view json_text);
ReferenceTable load_reference_table(const std::filesystem::path& file);

/// The copies of table1.json and table2.json compiled into the binary.
std::vector<ReferenceTable> embedded_reference_tables();
/// table1.json and table2.json from a directory.
std::vector<ReferenceTable> load_reference_tables(
    const std::filesystem::path& dir);

struct TableDiff {
  int table = 0;
  std::vector<ReferenceRow> missing;     // reference rows not reproduced
  std::vector<ReferenceRow> unexpected;  // computed rows absent from reference

  bool match() const { return missing.empty() && unexpected.empty(); }
};

/// Order-insensitive comparison of (members, outcomes) rows.
TableDiff diff_tables(const ReferenceTable& reference,
                      const GroupTable& computed);

}  // namespace hdbsm

#endif  // HDBSM_TOOLS_REFERENCES_HPP
