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

#include "hdbsm/sdc.hpp"

#include <stdexcept>

namespace hdbsm {

bool operator==(const SdcConfig& a, const SdcConfig& b) {
  return a.setup == b.setup && a.model == b.model && a.policy == b.policy &&
         a.seed == b.seed && a.shots == b.shots;
}

bool operator==(const SdcReport& a, const SdcReport& b) {
  return a.config == b.config && a.rng_algorithm == b.rng_algorithm &&
         a.messages == b.messages && a.usable_groups == b.usable_groups &&
         a.accuracy == b.accuracy && a.bits_per_photon == b.bits_per_photon;
}

Decoder::Decoder(const GroupTable& table) {
  for (std::size_t g = 0; g < table.groups.size(); ++g)
    for (const Outcome& o : table.groups[g].support)
      if (!lookup_.emplace(o, g).second)
        throw std::logic_error("outcome " + label(o) +
                               " belongs to more than one group");
}

std::size_t Decoder::decode(const Outcome& outcome) const {
  const auto it = lookup_.find(outcome);
  if (it == lookup_.end())
    throw std::logic_error("outcome " + label(outcome) +
                           " lies outside every group support");
  return it->second;
}

SdcReport run_sdc(const SdcConfig& config,
                  const std::vector<BellIndex>& messages) {
  constexpr int d = 4;
  if (config.shots < 1) throw std::domain_error("shots must be at least 1");
  for (const BellIndex& m : messages) validate(m, d);

  const GroupTable table =
      classify_bell_states(config.setup, d, config.model, config.policy);
  const Decoder decoder(table);
  const SinglePhotonUnitary network = build_setup(config.setup, d);
  const TwoPhotonState reference = reference_state(config.setup, d);

  SdcReport report;
  report.config = config;
  report.rng_algorithm = std::string(kRngAlgorithm);
  report.usable_groups = table.usable_count();
  report.bits_per_photon = channel_capacity(table);

  std::uint64_t correct = 0;
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < messages.size(); ++k) {
    MessageResult result;
    result.message = messages[k];
    result.expected_group = *table.group_of(label(messages[k]));

    const TwoPhotonState sent = encode(reference, messages[k], Arm::second);
    const OutcomeDistribution dist =
        outcome_distribution(evolve(sent, network), config.model);
    for (const Outcome& o : sample(dist, config.shots, config.seed + k)) {
      const std::size_t g = decoder.decode(o);
      ++result.decoded[g];
      if (g == result.expected_group) ++correct;
      ++total;
    }
    report.messages.push_back(std::move(result));
  }
  report.accuracy =
      total == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(total);
  return report;
}

}  // namespace hdbsm
