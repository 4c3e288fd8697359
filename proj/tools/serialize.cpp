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

#include "serialize.hpp"

namespace hdbsm {

using nlohmann::json;

void to_json(json& j, const Outcome& o) { j = label(o); }

void from_json(const json& j, Outcome& o) {
  o = parse_outcome(j.get<std::string>());
}

void to_json(json& j, const OutcomeDistribution& d) {
  json probs = json::array();
  for (const auto& [o, p] : d.probs)
    probs.push_back({{"outcome", label(o)}, {"probability", p}});
  j = {{"model", to_string(d.model)}, {"probabilities", probs}};
}

void from_json(const json& j, OutcomeDistribution& d) {
  d.model = parse_detector_model(j.at("model").get<std::string>());
  d.probs.clear();
  for (const json& row : j.at("probabilities"))
    d.probs[row.at("outcome").get<Outcome>()] =
        row.at("probability").get<double>();
}

void to_json(json& j, const GroupTable& t) {
  json groups = json::array();
  for (std::size_t g = 0; g < t.groups.size(); ++g) {
    json outcomes = json::array();
    for (const Outcome& o : t.groups[g].support) outcomes.push_back(label(o));
    groups.push_back({{"group", g + 1},
                      {"members", t.groups[g].members},
                      {"outcomes", outcomes},
                      {"usable", t.groups[g].usable}});
  }
  j = {{"setup", to_string(t.setup)},
       {"dim", t.dim},
       {"model", to_string(t.model)},
       {"policy", to_string(t.policy)},
       {"groups", groups}};
}

void from_json(const json& j, GroupTable& t) {
  t.setup = parse_setup(j.at("setup").get<std::string>());
  t.dim = j.at("dim").get<int>();
  t.model = parse_detector_model(j.at("model").get<std::string>());
  t.policy = parse_policy(j.at("policy").get<std::string>());
  t.groups.clear();
  for (const json& row : j.at("groups")) {
    Group g;
    g.members = row.at("members").get<std::vector<std::string>>();
    for (const json& o : row.at("outcomes")) g.support.insert(o.get<Outcome>());
    g.usable = row.value("usable", true);
    t.groups.push_back(std::move(g));
  }
}

void to_json(json& j, const SdcConfig& c) {
  j = {{"setup", to_string(c.setup)},
       {"model", to_string(c.model)},
       {"policy", to_string(c.policy)},
       {"seed", c.seed},
       {"shots", c.shots}};
}

void from_json(const json& j, SdcConfig& c) {
  c.setup = parse_setup(j.at("setup").get<std::string>());
  c.model = parse_detector_model(j.at("model").get<std::string>());
  c.policy = parse_policy(j.at("policy").get<std::string>());
  c.seed = j.at("seed").get<std::uint64_t>();
  c.shots = j.at("shots").get<std::uint64_t>();
}

void to_json(json& j, const SdcReport& r) {
  json messages = json::array();
  for (const MessageResult& m : r.messages) {
    json decoded = json::array();
    for (const auto& [g, count] : m.decoded)
      decoded.push_back({{"group", g + 1}, {"count", count}});
    messages.push_back({{"message", label(m.message)},
                        {"expected_group", m.expected_group + 1},
                        {"decoded", decoded}});
  }
  j = {{"metadata", {{"rng", r.rng_algorithm}}},
       {"config", r.config},
       {"messages", messages},
       {"usable_groups", r.usable_groups},
       {"accuracy", r.accuracy},
       {"bits_per_photon", r.bits_per_photon}};
}

void from_json(const json& j, SdcReport& r) {
  r.rng_algorithm = j.at("metadata").at("rng").get<std::string>();
  r.config = j.at("config").get<SdcConfig>();
  r.messages.clear();
  for (const json& row : j.at("messages")) {
    MessageResult m;
    m.message = parse_bell_index(row.at("message").get<std::string>());
    m.expected_group = row.at("expected_group").get<std::size_t>() - 1;
    for (const json& d : row.at("decoded"))
      m.decoded[d.at("group").get<std::size_t>() - 1] =
          d.at("count").get<std::uint64_t>();
    r.messages.push_back(std::move(m));
  }
  r.usable_groups = j.at("usable_groups").get<std::size_t>();
  r.accuracy = j.at("accuracy").get<double>();
  r.bits_per_photon = j.at("bits_per_photon").get<double>();
}

}  // namespace hdbsm
