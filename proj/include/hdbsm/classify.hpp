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

#ifndef HDBSM_CLASSIFY_HPP
#define HDBSM_CLASSIFY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hdbsm/detect.hpp"
#include "hdbsm/optics.hpp"

namespace hdbsm {

/// strict: every support-disjoint group carries information.
/// loss_conservative: with threshold detectors, a single click cannot
/// certify that both photons arrived, so states that can produce one are
/// set aside as unusable.
enum class GroupingPolicy { strict, loss_conservative };

std::string to_string(GroupingPolicy policy);
/// Accepts "strict", "loss_conservative" and "loss-conservative".
GroupingPolicy parse_policy(const std::string& text);

struct LabeledState {
  std::string label;
  TwoPhotonState state;
};

struct Group {
  std::vector<std::string> members;
  std::set<Outcome> support;
  bool usable = true;

  friend bool operator==(const Group&, const Group&) = default;
};

struct GroupTable {
  Setup setup = Setup::fig1;
  int dim = 4;
  DetectorModel model = DetectorModel::pnrd;
  GroupingPolicy policy = GroupingPolicy::strict;
  std::vector<Group> groups;

  std::size_t usable_count() const;
  /// Position of the group holding `member`, if any.
  std::optional<std::size_t> group_of(const std::string& member) const;

  friend bool operator==(const GroupTable&, const GroupTable&) = default;
};

/// Connected components of the confusability graph (edge iff outcome
/// supports intersect), ordered by first appearance in `states`. Every state
/// is evolved through `network` first.
GroupTable classify(const std::vector<LabeledState>& states,
                    const SinglePhotonUnitary& network, DetectorModel model,
                    GroupingPolicy policy);

/// All Bell states of dimension `dim` entering `setup`, in (j, m, n) order.
std::vector<LabeledState> bell_inputs(Setup setup, int dim);

/// classify(bell_inputs(setup, dim), build_setup(setup, dim), ...).
GroupTable classify_bell_states(Setup setup, int dim, DetectorModel model,
                                GroupingPolicy policy);

/// log2 of the number of usable groups. Throws std::domain_error if the table
/// has no usable group.
double channel_capacity(const GroupTable& table);

/// Throws std::logic_error if two groups share a label or an outcome.
void check_disjoint(const GroupTable& table);

}  // namespace hdbsm

#endif  // HDBSM_CLASSIFY_HPP
