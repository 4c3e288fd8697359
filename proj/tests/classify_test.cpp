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

#include "hdbsm/classify.hpp"

#include <cmath>
#include <queue>

#include "gtest/gtest.h"
#include "references.hpp"

namespace hdbsm {
namespace {

std::map<std::string, std::set<Outcome>> member_supports(hdbsm::Setup setup, int dim,
                                                         DetectorModel model) {
  std::map<std::string, std::set<Outcome>> out;
  const SinglePhotonUnitary net = build_setup(setup, dim);
  for (const LabeledState& s : bell_inputs(setup, dim))
    out[s.label] = outcome_distribution(evolve(s.state, net), model).support();
  return out;
}

TEST(Classify, BeamSplitterTableMatchesReference) {
  const GroupTable table = classify_bell_states(Setup::fig1, 4, DetectorModel::pnrd,
                                                GroupingPolicy::strict);
  ASSERT_EQ(table.groups.size(), 7u);
  const TableDiff diff = diff_tables(
      load_reference_table(HDBSM_REFERENCES_DIR "/table1.json"), table);
  EXPECT_TRUE(diff.match());
  // First-appearance order reproduces the reference row order.
  const ReferenceTable ref = load_reference_table(HDBSM_REFERENCES_DIR "/table1.json");
  for (std::size_t g = 0; g < ref.rows.size(); ++g) {
    EXPECT_EQ(std::set<std::string>(table.groups[g].members.begin(),
                                    table.groups[g].members.end()),
              ref.rows[g].members);
    EXPECT_EQ(table.groups[g].support, ref.rows[g].outcomes);
  }
}

TEST(Classify, PolarizationTableMatchesReference) {
  const GroupTable table = classify_bell_states(Setup::fig2, 4, DetectorModel::pnrd,
                                                GroupingPolicy::strict);
  ASSERT_EQ(table.groups.size(), 12u);
  const TableDiff diff = diff_tables(
      load_reference_table(HDBSM_REFERENCES_DIR "/table2.json"), table);
  EXPECT_TRUE(diff.match());
}

TEST(Classify, QubitBaselineHasThreeGroups) {
  const GroupTable table = classify_bell_states(Setup::fig1, 2, DetectorModel::pnrd,
                                                GroupingPolicy::strict);
  ASSERT_EQ(table.groups.size(), 3u);
  EXPECT_EQ(table.groups[0].members,
            (std::vector<std::string>{"psi[0][0][0]", "psi[0][1][0]"}));
  EXPECT_EQ(table.groups[1].members, std::vector<std::string>{"psi[1][0][0]"});
  EXPECT_EQ(table.groups[2].members, std::vector<std::string>{"psi[1][1][0]"});
  for (const Outcome& o : table.groups[0].support) EXPECT_TRUE(o.bunched());
  for (const Outcome& o : table.groups[1].support)
    EXPECT_EQ(o.clicks[0].arm, o.clicks[1].arm);
  for (const Outcome& o : table.groups[2].support)
    EXPECT_NE(o.clicks[0].arm, o.clicks[1].arm);
  EXPECT_NEAR(channel_capacity(table), std::log2(3.0), 1e-12);
}

TEST(Classify, SingleState) {
  const GroupTable table =
      classify({{"only", make_bell_state(4, {2, 1, 1})}}, build_fig1_network(4),
               DetectorModel::pnrd, GroupingPolicy::strict);
  ASSERT_EQ(table.groups.size(), 1u);
  EXPECT_EQ(table.groups[0].members, std::vector<std::string>{"only"});
  EXPECT_EQ(channel_capacity(table), 0.0);
}

TEST(Capacity, FourReferenceFigures) {
  struct Case {
    hdbsm::Setup setup;
    DetectorModel model;
    GroupingPolicy policy;
    double groups;
    const char* rounded;
  };
  const Case cases[] = {
      {Setup::fig1, DetectorModel::pnrd, GroupingPolicy::strict, 7, "2.81"},
      {Setup::fig1, DetectorModel::threshold, GroupingPolicy::loss_conservative, 6, "2.58"},
      {Setup::fig2, DetectorModel::pnrd, GroupingPolicy::strict, 12, "3.58"},
      {Setup::fig2, DetectorModel::threshold, GroupingPolicy::loss_conservative, 11, "3.46"},
  };
  for (const Case& c : cases) {
    const GroupTable table = classify_bell_states(c.setup, 4, c.model, c.policy);
    EXPECT_NEAR(channel_capacity(table), std::log2(c.groups), 1e-12);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.2f", channel_capacity(table));
    EXPECT_STREQ(buf, c.rounded);
  }
}

TEST(Capacity, StrictThresholdKeepsAllGroups) {
  // Ideal click detectors still separate the groups.
  EXPECT_EQ(classify_bell_states(Setup::fig1, 4, DetectorModel::threshold,
                                 GroupingPolicy::strict)
                .usable_count(),
            7u);
  EXPECT_EQ(classify_bell_states(Setup::fig2, 4, DetectorModel::threshold,
                                 GroupingPolicy::strict)
                .usable_count(),
            12u);
  // The policy has nothing to quarantine with number resolution.
  EXPECT_EQ(classify_bell_states(Setup::fig1, 4, DetectorModel::pnrd,
                                 GroupingPolicy::loss_conservative)
                .usable_count(),
            7u);
}

TEST(Capacity, QuarantineIsTheBunchedGroup) {
  const GroupTable table = classify_bell_states(
      Setup::fig1, 4, DetectorModel::threshold, GroupingPolicy::loss_conservative);
  ASSERT_EQ(table.groups.size(), 7u);
  EXPECT_FALSE(table.groups[0].usable);
  EXPECT_EQ(table.groups[0].members.size(), 4u);
  for (std::size_t g = 1; g < table.groups.size(); ++g)
    EXPECT_TRUE(table.groups[g].usable);
}

TEST(Capacity, EmptyTableIsDomainError) {
  EXPECT_THROW(channel_capacity(GroupTable{}), std::domain_error);
  GroupTable none;
  none.groups.push_back({{"x"}, {}, false});
  EXPECT_THROW(channel_capacity(none), std::domain_error);
}

class PartitionProperties
    : public ::testing::TestWithParam<std::tuple<Setup, int, DetectorModel>> {};

TEST_P(PartitionProperties, Hold) {
  const auto [setup, dim, model] = GetParam();
  const GroupTable table =
      classify_bell_states(setup, dim, model, GroupingPolicy::strict);
  const auto supports = member_supports(setup, dim, model);

  EXPECT_NO_THROW(check_disjoint(table));
  std::size_t covered = 0;
  for (const Group& g : table.groups) {
    covered += g.members.size();
    // Identical support within a group.
    for (const std::string& m : g.members) EXPECT_EQ(supports.at(m), g.support) << m;

    // Members are connected through overlapping supports.
    std::vector<bool> seen(g.members.size(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    while (!todo.empty()) {
      const std::size_t a = todo.front();
      todo.pop();
      for (std::size_t b = 0; b < g.members.size(); ++b) {
        if (seen[b]) continue;
        const auto& sa = supports.at(g.members[a]);
        const auto& sb = supports.at(g.members[b]);
        const bool overlap = std::any_of(sa.begin(), sa.end(), [&](const Outcome& o) {
          return sb.count(o) > 0;
        });
        if (overlap) {
          seen[b] = true;
          todo.push(b);
        }
      }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }));
  }
  EXPECT_EQ(covered, supports.size());
}

INSTANTIATE_TEST_SUITE_P(
    AllSetups, PartitionProperties,
    ::testing::Values(std::tuple{Setup::fig1, 4, DetectorModel::pnrd},
                      std::tuple{Setup::fig1, 4, DetectorModel::threshold},
                      std::tuple{Setup::fig2, 4, DetectorModel::pnrd},
                      std::tuple{Setup::fig2, 4, DetectorModel::threshold},
                      std::tuple{Setup::fig1, 2, DetectorModel::pnrd}));

TEST(Classify, OnlyFirstGroupNeedsNumberResolution) {
  for (hdbsm::Setup setup : {Setup::fig1, Setup::fig2}) {
    const GroupTable table =
        classify_bell_states(setup, 4, DetectorModel::pnrd, GroupingPolicy::strict);
    std::vector<std::size_t> with_double;
    for (std::size_t g = 0; g < table.groups.size(); ++g)
      if (std::any_of(table.groups[g].support.begin(), table.groups[g].support.end(),
                      [](const Outcome& o) { return o.bunched(); }))
        with_double.push_back(g);
    EXPECT_EQ(with_double, std::vector<std::size_t>{0}) << to_string(setup);
  }
}

TEST(Classify, PolarizationRefinesBeamSplitterGrouping) {
  const GroupTable coarse = classify_bell_states(Setup::fig1, 4, DetectorModel::pnrd,
                                                 GroupingPolicy::strict);
  const GroupTable fine = classify_bell_states(Setup::fig2, 4, DetectorModel::pnrd,
                                               GroupingPolicy::strict);
  EXPECT_GE(fine.groups.size(), coarse.groups.size());
  for (const Group& g : fine.groups) {
    const auto home = coarse.group_of(g.members.front());
    ASSERT_TRUE(home);
    for (const std::string& m : g.members) EXPECT_EQ(coarse.group_of(m), home);
  }
}

TEST(Classify, PolicyNames) {
  EXPECT_EQ(parse_policy("loss-conservative"), GroupingPolicy::loss_conservative);
  EXPECT_EQ(parse_policy(to_string(GroupingPolicy::loss_conservative)),
            GroupingPolicy::loss_conservative);
  EXPECT_EQ(parse_policy("strict"), GroupingPolicy::strict);
  EXPECT_THROW(parse_policy("lenient"), std::invalid_argument);
}

}  // namespace
}  // namespace hdbsm
