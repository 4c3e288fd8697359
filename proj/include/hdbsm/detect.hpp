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

#ifndef HDBSM_DETECT_HPP
#define HDBSM_DETECT_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hdbsm/qstate.hpp"

namespace hdbsm {

/// One detector per output mode.
using DetectorId = Mode;

enum class DetectorModel { pnrd, threshold };

std::string to_string(DetectorModel model);
DetectorModel parse_detector_model(const std::string& text);

/// Detectors that fired, sorted. A number-resolving outcome always lists two
/// entries (A0 A0 is a double click); a threshold outcome lists one or two
/// distinct detectors.
struct Outcome {
  std::vector<DetectorId> clicks;

  bool bunched() const {
    return clicks.size() == 2 && clicks[0] == clicks[1];
  }
  friend auto operator<=>(const Outcome&, const Outcome&) = default;
};

Outcome make_outcome(DetectorId first, DetectorId second);
/// "A0 A1", "A0+ A2-", "B3" (threshold single click).
std::string label(const Outcome& outcome);
Outcome parse_outcome(const std::string& text);

/// Number-resolving outcome as seen by click/no-click detectors.
Outcome collapse_multiplicity(const Outcome& outcome);

struct OutcomeDistribution {
  DetectorModel model = DetectorModel::pnrd;
  std::map<Outcome, double> probs;

  double total() const;
  std::set<Outcome> support() const;
  double probability(const Outcome& outcome) const;
};

/// Born-rule detection statistics of a post-network state. Throws
/// std::domain_error if the state norm is off by more than 1e-6.
OutcomeDistribution outcome_distribution(const TwoPhotonState& state,
                                         DetectorModel model);

/// Image of a number-resolving distribution under multiplicity collapse.
OutcomeDistribution to_threshold(const OutcomeDistribution& pnrd);

/// Identifier of the sampling algorithm, recorded in report metadata.
inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64/inverse-cdf-53bit";

/// i.i.d. draws by inverse CDF over the distribution's outcome order. The
/// uniform variate is the top 53 bits of a std::mt19937_64 word, so a given
/// (dist, shots, seed) produces the same sequence on every platform.
std::vector<Outcome> sample(const OutcomeDistribution& dist,
                            std::uint64_t shots, std::uint64_t seed);

std::map<Outcome, std::uint64_t> tally(const std::vector<Outcome>& draws);

}  // namespace hdbsm

#endif  // HDBSM_DETECT_HPP
