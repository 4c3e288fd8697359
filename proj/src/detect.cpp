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

#include "hdbsm/detect.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hdbsm {

std::string to_string(DetectorModel model) {
  return model == DetectorModel::pnrd ? "pnrd" : "threshold";
}

DetectorModel parse_detector_model(const std::string& text) {
  if (text == "pnrd") return DetectorModel::pnrd;
  if (text == "threshold") return DetectorModel::threshold;
  throw std::invalid_argument("unknown detector model '" + text + "'");
}

Outcome make_outcome(DetectorId first, DetectorId second) {
  if (second < first) std::swap(first, second);
  return Outcome{{first, second}};
}

std::string label(const Outcome& outcome) {
  std::string s;
  for (const DetectorId& d : outcome.clicks) {
    if (!s.empty()) s += ' ';
    s += label(d);
  }
  return s;
}

Outcome parse_outcome(const std::string& text) {
  std::istringstream in(text);
  Outcome out;
  std::string token;
  while (in >> token) out.clicks.push_back(parse_mode(token));
  if (out.clicks.empty() || out.clicks.size() > 2)
    throw std::invalid_argument("outcome '" + text +
                                "' must name one or two detectors");
  std::sort(out.clicks.begin(), out.clicks.end());
  return out;
}

Outcome collapse_multiplicity(const Outcome& outcome) {
  if (outcome.bunched()) return Outcome{{outcome.clicks.front()}};
  return outcome;
}

double OutcomeDistribution::total() const {
  double sum = 0.0;
  for (const auto& [o, p] : probs) sum += p;
  return sum;
}

std::set<Outcome> OutcomeDistribution::support() const {
  std::set<Outcome> out;
  for (const auto& [o, p] : probs) out.insert(o);
  return out;
}

double OutcomeDistribution::probability(const Outcome& outcome) const {
  const auto it = probs.find(outcome);
  return it == probs.end() ? 0.0 : it->second;
}

OutcomeDistribution outcome_distribution(const TwoPhotonState& state,
                                         DetectorModel model) {
  const double norm = state.norm_squared();
  if (std::abs(norm - 1.0) > 1e-6)
    throw std::domain_error("outcome distribution needs a normalized state "
                            "(norm^2 = " + std::to_string(norm) + ")");
  OutcomeDistribution dist;
  dist.model = DetectorModel::pnrd;
  const ModeSpace& space = state.space();
  for (const auto& [key, amp] : state.amplitudes()) {
    const double weight = key.first == key.second ? 1.0 : 2.0;
    const double p = weight * std::norm(amp);
    if (p <= 0.0) continue;
    dist.probs[make_outcome(space.mode(key.first), space.mode(key.second))] +=
        p;
  }
  return model == DetectorModel::pnrd ? dist : to_threshold(dist);
}

OutcomeDistribution to_threshold(const OutcomeDistribution& pnrd) {
  OutcomeDistribution out;
  out.model = DetectorModel::threshold;
  for (const auto& [o, p] : pnrd.probs) out.probs[collapse_multiplicity(o)] += p;
  return out;
}

std::vector<Outcome> sample(const OutcomeDistribution& dist,
                            std::uint64_t shots, std::uint64_t seed) {
  if (dist.probs.empty())
    throw std::domain_error("cannot sample an empty distribution");
  std::vector<const Outcome*> outcomes;
  std::vector<double> cdf;
  double running = 0.0;
  for (const auto& [o, p] : dist.probs) {
    running += p;
    outcomes.push_back(&o);
    cdf.push_back(running);
  }

  std::mt19937_64 engine(seed);
  std::vector<Outcome> draws;
  draws.reserve(shots);
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53 * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    draws.push_back(*outcomes[static_cast<std::size_t>(it - cdf.begin())]);
  }
  return draws;
}

std::map<Outcome, std::uint64_t> tally(const std::vector<Outcome>& draws) {
  std::map<Outcome, std::uint64_t> counts;
  for (const Outcome& o : draws) ++counts[o];
  return counts;
}

}  // namespace hdbsm
