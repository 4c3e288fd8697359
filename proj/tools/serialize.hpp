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

#ifndef HDBSM_TOOLS_SERIALIZE_HPP
#define HDBSM_TOOLS_SERIALIZE_HPP

#include "hdbsm/classify.hpp"
#include "hdbsm/detect.hpp"
#include "hdbsm/sdc.hpp"
#include "json.hpp"

namespace hdbsm {

// JSON encodings used on standard output. Groups are numbered from 1 in
// JSON and from 0 in memory.

void to_json(nlohmann::json& j, const Outcome& o);
void from_json(const nlohmann::json& j, Outcome& o);

void to_json(nlohmann::json& j, const OutcomeDistribution& d);
void from_json(const nlohmann::json& j, OutcomeDistribution& d);

void to_json(nlohmann::json& j, const GroupTable& t);
void from_json(const nlohmann::json& j, GroupTable& t);

void to_json(nlohmann::json& j, const SdcConfig& c);
void from_json(const nlohmann::json& j, SdcConfig& c);

void to_json(nlohmann::json& j, const SdcReport& r);
void from_json(const nlohmann::json& j, SdcReport& r);

}  // namespace hdbsm

#endif  // HDBSM_TOOLS_SERIALIZE_HPP
