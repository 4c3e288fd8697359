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

#include "references.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hdbsm {

// Defined in the generated references_data.cpp.
extern const char* const kEmbeddedTable1;
extern const char* const kEmbeddedTable2;

ReferenceTable parse_reference_table(std::string_view json_text) {
  using nlohmann::json;
  ReferenceTable table;
  try {
    const json j = json::parse(json_text);
    table.table = j.at("table").get<int>();
    table.setup = parse_setup(j.at("setup").get<std::string>());
    table.dim = j.value("dim", 4);
    table.model = parse_detector_model(j.value("model", std::string("pnrd")));
    for (const json& row : j.at("groups")) {
      ReferenceRow r;
      r.group = row.at("group").get<int>();
      for (const json& m : row.at("members")) {
        const std::string name = m.get<std::string>();
        validate(parse_bell_index(name), table.dim);
        r.members.insert(name);
      }
      for (const json& o : row.at("outcomes")) {
        const Outcome outcome = parse_outcome(o.get<std::string>());
        if (outcome.clicks.size() != 2)
          throw std::invalid_argument("reference outcome '" +
                                      o.get<std::string>() +
                                      "' is not a detector pair");
        r.outcomes.insert(outcome);
      }
      table.rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("reference table: ") + e.what());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("reference table: ") + e.what());
  }
  return table;
}

ReferenceTable load_reference_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_reference_table(text.str());
}

std::vector<ReferenceTable> embedded_reference_tables() {
  return {parse_reference_table(kEmbeddedTable1),
          parse_reference_table(kEmbeddedTable2)};
}

std::vector<ReferenceTable> load_reference_tables(
    const std::filesystem::path& dir) {
  return {load_reference_table(dir / "table1.json"),
          load_reference_table(dir / "table2.json")};
}

TableDiff diff_tables(const ReferenceTable& reference,
                      const GroupTable& computed) {
  std::vector<ReferenceRow> rows;
  for (std::size_t g = 0; g < computed.groups.size(); ++g) {
    const Group& group = computed.groups[g];
    rows.push_back({static_cast<int>(g + 1),
                    {group.members.begin(), group.members.end()},
                    group.support});
  }
  const auto same = [](const ReferenceRow& a, const ReferenceRow& b) {
    return a.members == b.members && a.outcomes == b.outcomes;
  };

  TableDiff diff;
  diff.table = reference.table;
  for (const ReferenceRow& ref : reference.rows) {
    bool found = false;
    for (const ReferenceRow& row : rows) found = found || same(ref, row);
    if (!found) diff.missing.push_back(ref);
  }
  for (const ReferenceRow& row : rows) {
    bool found = false;
    for (const ReferenceRow& ref : reference.rows) found = found || same(ref, row);
    if (!found) diff.unexpected.push_back(row);
  }
  return diff;
}

}  // namespace hdbsm
