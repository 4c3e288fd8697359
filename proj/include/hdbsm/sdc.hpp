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

#ifndef HDBSM_SDC_HPP
#define HDBSM_SDC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hdbsm/classify.hpp"

namespace hdbsm {

struct SdcConfig {
  Setup setup = Setup::fig1;
  DetectorModel model = DetectorModel::pnrd;
  GroupingPolicy policy = GroupingPolicy::strict;
  std::uint64_t seed = 0;
  std::uint64_t shots = 1000;
};

struct MessageResult {
  BellIndex message;
  std::size_t expected_group = 0;  // 0-based position in the group table
  std::map<std::size_t, std::uint64_t> decoded;  // group -> count

  friend bool operator==(const MessageResult&, const MessageResult&) = default;
};

struct SdcReport {
  SdcConfig config;
  std::string rng_algorithm;
  std::vector<MessageResult> messages;
  std::size_t usable_groups = 0;
  double accuracy = 0.0;
  double bits_per_photon = 0.0;
};

bool operator==(const SdcConfig& a, const SdcConfig& b);
bool operator==(const SdcReport& a, const SdcReport& b);

/// Maps every outcome of a group table to the group whose support holds it.
class Decoder {
 public:
  explicit Decoder(const GroupTable& table);
  /// Throws std::logic_error for an outcome outside every support.
  std::size_t decode(const Outcome& outcome) const;

 private:
  std::map<Outcome, std::size_t> lookup_;
};

/// Superdense-coding round trip at d = 4. The receiver's reference state is
/// encoded on the second photon with each message's unitary, measured with
/// the configured setup, and every shot is decoded to a group. Message k is
/// sampled with seed config.seed + k.
SdcReport run_sdc(const SdcConfig& config,
                  const std::vector<BellIndex>& messages);

}  // namespace hdbsm

#endif  // HDBSM_SDC_HPP
