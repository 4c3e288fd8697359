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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "serialize.hpp"

namespace hdbsm {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTables, BeamSplitterText) {
  const CliResult r = run({"tables", "--setup", "fig1", "--format", "text"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("groups: 7, usable: 7"), std::string::npos);
  EXPECT_NE(r.out.find("capacity: 2.807 bits/photon"), std::string::npos);
  EXPECT_NE(r.out.find("A0 A0, A1 A1, A2 A2, A3 A3, B0 B0"), std::string::npos);
}

TEST(CliTables, PolarizationJsonRoundTrips) {
  const CliResult r = run({"tables", "--setup", "fig2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("table").at("groups").size(), 12u);
  const GroupTable parsed = j.at("table").get<GroupTable>();
  EXPECT_EQ(parsed, classify_bell_states(Setup::fig2, 4, DetectorModel::pnrd,
                                         GroupingPolicy::strict));
  EXPECT_FALSE(j.at("metadata").contains("timestamp"));
}

TEST(CliTables, QubitBaselineAndCsv) {
  const CliResult r = run({"tables", "--setup", "fig1", "--dim", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out).at("table").at("groups").size(), 3u);

  const CliResult csv = run({"tables", "--setup", "fig1", "--model", "threshold",
                       "--policy", "loss-conservative", "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.rfind("group,usable,members,outcomes\n", 0), 0u);
  EXPECT_NE(csv.out.find("1,false,"), std::string::npos);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 8);
}

TEST(CliTables, PureFunctionOfFlags) {
  const std::vector<std::string> args = {"tables", "--setup", "fig2", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliUsage, BadFlagsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"tables", "--setup", "fig3"}).code, kExitUsage);
  EXPECT_EQ(run({"tables", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"tables", "--dim", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"tables", "--setup", "fig2", "--dim", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"sample", "--state", "1,0,0", "--shots", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"sample", "--state", "one"}).code, kExitUsage);
  EXPECT_EQ(run({"sample", "--state", "4,0,0"}).code, kExitUsage);
  EXPECT_EQ(run({"sample"}).code, kExitUsage);
  EXPECT_EQ(run({"sdc", "--shots", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliVerify, EmbeddedReferencesMatch) {
  const CliResult r = run({"verify"});
  ASSERT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("2/2 tables match"), std::string::npos);
  for (const char* cap : {"fig1 pnrd strict: 2.807", "fig1 threshold loss_conservative: 2.585",
                          "fig2 pnrd strict: 3.585", "fig2 threshold loss_conservative: 3.459"})
    EXPECT_NE(r.out.find(cap), std::string::npos) << cap;

  const CliResult j = run({"verify", "--format", "json", "--references", HDBSM_REFERENCES_DIR});
  ASSERT_EQ(j.code, kExitOk);
  EXPECT_EQ(json::parse(j.out).at("matched"), 2);
}

TEST(CliVerify, PerturbedReferenceIsReported) {
  const fs::path dir = fs::temp_directory_path() / "hdbsm_perturbed_refs";
  fs::create_directories(dir);
  fs::copy_file(HDBSM_REFERENCES_DIR "/table2.json", dir / "table2.json",
                fs::copy_options::overwrite_existing);
  std::ifstream in(HDBSM_REFERENCES_DIR "/table1.json");
  json t1 = json::parse(in);
  // Move one detection pattern from group 2 into group 3.
  auto& g2 = t1["groups"][1]["outcomes"];
  g2.erase(g2.begin() + 3);
  t1["groups"][2]["outcomes"].push_back("B2 B3");
  std::ofstream(dir / "table1.json") << t1.dump(2);

  const CliResult r = run({"verify", "--references", dir.string()});
  EXPECT_EQ(r.code, kExitMismatch);
  EXPECT_NE(r.out.find("table 1 (fig1): MISMATCH"), std::string::npos);
  EXPECT_NE(r.out.find("- reference group 2:"), std::string::npos);
  EXPECT_NE(r.out.find("- reference group 3:"), std::string::npos);
  EXPECT_NE(r.out.find("table 2 (fig2): match"), std::string::npos);
  EXPECT_NE(r.out.find("1/2 tables match"), std::string::npos);
  fs::remove_all(dir);
}

TEST(CliVerify, MalformedReferenceIsUsageError) {
  const fs::path dir = fs::temp_directory_path() / "hdbsm_bad_refs";
  fs::create_directories(dir);
  std::ofstream(dir / "table1.json") << R"({"table": 1, "setup": "fig1", "groups": [)"
                                        R"({"group": 1, "members": ["psi[9][0][0]"], "outcomes": []}]})";
  std::ofstream(dir / "table2.json") << "{}";
  EXPECT_EQ(run({"verify", "--references", dir.string()}).code, kExitUsage);
  fs::remove_all(dir);
}

TEST(CliSample, FrequenciesNearAnalytic) {
  const CliResult r = run({"sample", "--state", "1,0,0", "--setup", "fig1", "--shots",
                     "100000", "--seed", "7", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.at("frequencies").size(), 4u);
  for (const json& row : j.at("frequencies")) {
    EXPECT_NEAR(row.at("probability").get<double>(), 0.25, 1e-12);
    EXPECT_LT(std::abs(row.at("z").get<double>()), 5.0);
  }
  EXPECT_EQ(j.at("metadata").at("seed"), 7);
  EXPECT_EQ(j.at("metadata").at("rng"), std::string(kRngAlgorithm));
  const OutcomeDistribution d = j.at("distribution").get<OutcomeDistribution>();
  EXPECT_NEAR(d.total(), 1.0, 1e-12);
}

TEST(CliSample, ByteIdenticalReruns) {
  for (const char* format : {"text", "json", "csv"}) {
    const std::vector<std::string> args = {"sample", "--state", "3,1,0", "--setup",
                                           "fig2", "--shots", "20000", "--seed",
                                           "5", "--format", format};
    const CliResult a = run(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, run(args).out);
  }
}

TEST(CliSdc, Capacities) {
  const CliResult fig2 = run({"sdc", "--setup", "fig2"});
  ASSERT_EQ(fig2.code, kExitOk) << fig2.err;
  EXPECT_NE(fig2.out.find("accuracy: 1.000000"), std::string::npos);
  EXPECT_NE(fig2.out.find("bits/photon: 3.585"), std::string::npos);

  const CliResult lossy = run({"sdc", "--setup", "fig1", "--model", "threshold",
                         "--policy", "loss-conservative"});
  ASSERT_EQ(lossy.code, kExitOk);
  EXPECT_NE(lossy.out.find("bits/photon: 2.585"), std::string::npos);

  const CliResult single = run({"sdc", "--setup", "fig1", "--shots", "1"});
  ASSERT_EQ(single.code, kExitOk);
  EXPECT_NE(single.out.find("accuracy: 1.000000"), std::string::npos);
}

TEST(CliSdc, JsonRoundTrip) {
  const CliResult r = run({"sdc", "--setup", "fig1", "--shots", "50", "--seed", "3",
                     "--message", "1,1,0", "--message", "psi[3][0][1]",
                     "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const SdcReport parsed = json::parse(r.out).get<SdcReport>();
  const SdcReport direct =
      run_sdc({Setup::fig1, DetectorModel::pnrd, GroupingPolicy::strict, 3, 50},
              {{1, 1, 0}, {3, 0, 1}});
  EXPECT_EQ(parsed, direct);
}

TEST(Serialize, RoundTrips) {
  for (hdbsm::Setup setup : {Setup::fig1, Setup::fig2})
    for (DetectorModel model : {DetectorModel::pnrd, DetectorModel::threshold}) {
      const GroupTable t =
          classify_bell_states(setup, 4, model, GroupingPolicy::loss_conservative);
      EXPECT_EQ(json::parse(json(t).dump()).get<GroupTable>(), t);

      const OutcomeDistribution d = outcome_distribution(
          evolve(setup_input_state(setup, 4, {3, 1, 1}), build_setup(setup, 4)),
          model);
      const OutcomeDistribution back =
          json::parse(json(d).dump()).get<OutcomeDistribution>();
      EXPECT_EQ(back.model, d.model);
      EXPECT_EQ(back.probs, d.probs);
    }
  const SdcReport r = run_sdc({Setup::fig2, DetectorModel::threshold,
                               GroupingPolicy::loss_conservative, 8, 40},
                              bell_indices(4));
  EXPECT_EQ(json::parse(json(r).dump()).get<SdcReport>(), r);
}

}  // namespace
}  // namespace hdbsm
