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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hdbsm {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller root wins so roots follow first appearance.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool intersects(const std::set<Outcome>& a, const std::set<Outcome>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return true;
  }
  return false;
}

bool has_single_click(const std::set<Outcome>& support) {
  return std::any_of(support.begin(), support.end(),
                     [](const Outcome& o) { return o.clicks.size() == 1; });
}

}  // namespace

std::string to_string(GroupingPolicy policy) {
  return policy == GroupingPolicy::strict ? "strict" : "loss_conservative";
}

GroupingPolicy parse_policy(const std::string& text) {
  if (text == "strict") return GroupingPolicy::strict;
  if (text == "loss_conservative" || text == "loss-conservative")
    return GroupingPolicy::loss_conservative;
  throw std::invalid_argument("unknown grouping policy '" + text + "'");
}

std::size_t GroupTable::usable_count() const {
  return static_cast<std::size_t>(std::count_if(
      groups.begin(), groups.end(), [](const Group& g) { return g.usable; }));
}

std::optional<std::size_t> GroupTable::group_of(
    const std::string& member) const {
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (std::find(groups[g].members.begin(), groups[g].members.end(),
                  member) != groups[g].members.end())
      return g;
  return std::nullopt;
}

GroupTable classify(const std::vector<LabeledState>& states,
                    const SinglePhotonUnitary& network, DetectorModel model,
                    GroupingPolicy policy) {
  GroupTable table;
  table.setup = network.output().has_polarization() ? Setup::fig2 : Setup::fig1;
  table.dim = network.input().dim();
  table.model = model;
  table.policy = policy;

  std::vector<std::set<Outcome>> supports;
  supports.reserve(states.size());
  for (const LabeledState& s : states)
    supports.push_back(
        outcome_distribution(evolve(s.state, network), model).support());

  const bool quarantine = policy == GroupingPolicy::loss_conservative &&
                          model == DetectorModel::threshold;
  std::vector<bool> unusable(states.size(), false);
  if (quarantine)
    for (std::size_t i = 0; i < states.size(); ++i)
      unusable[i] = has_single_click(supports[i]);

  DisjointSets sets(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t k = i + 1; k < states.size(); ++k)
      if ((unusable[i] && unusable[k]) || intersects(supports[i], supports[k]))
        sets.unite(i, k);

  // Roots are the first-appearing member, so walking in input order yields
  // groups in first-appearance order.
  std::vector<std::optional<std::size_t>> slot(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (!slot[root]) {
      slot[root] = table.groups.size();
      table.groups.emplace_back();
    }
    Group& g = table.groups[*slot[root]];
    g.members.push_back(states[i].label);
    g.support.insert(supports[i].begin(), supports[i].end());
    if (unusable[i]) g.usable = false;
  }
  return table;
}

std::vector<LabeledState> bell_inputs(Setup setup, int dim) {
  std::vector<LabeledState> out;
  for (const BellIndex& idx : bell_indices(dim))
    out.push_back({label(idx), setup_input_state(setup, dim, idx)});
  return out;
}

GroupTable classify_bell_states(Setup setup, int dim, DetectorModel model,
                                GroupingPolicy policy) {
  GroupTable table = classify(bell_inputs(setup, dim),
                              build_setup(setup, dim), model, policy);
  table.setup = setup;
  return table;
}

double channel_capacity(const GroupTable& table) {
  if (table.groups.empty())
    throw std::domain_error("channel capacity of an empty group table");
  const std::size_t usable = table.usable_count();
  if (usable == 0) throw std::domain_error("group table has no usable group");
  return std::log2(static_cast<double>(usable));
}

void check_disjoint(const GroupTable& table) {
  std::set<std::string> labels;
  std::set<Outcome> outcomes;
  for (std::size_t g = 0; g < table.groups.size(); ++g) {
    for (const std::string& m : table.groups[g].members)
      if (!labels.insert(m).second)
        throw std::logic_error("state " + m + " appears in two groups");
    for (const Outcome& o : table.groups[g].support)
      if (!outcomes.insert(o).second)
        throw std::logic_error("outcome " + label(o) +
                               " is shared by two groups");
  }
}

}  // namespace hdbsm
