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

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hdbsm/classify.hpp"
#include "hdbsm/sdc.hpp"
#include "references.hpp"
#include "serialize.hpp"

namespace hdbsm {
namespace {

using nlohmann::json;

std::string fixed(double value, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  return s.str();
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string s;
  for (const std::string& item : items) {
    if (!s.empty()) s += sep;
    s += item;
  }
  return s;
}

std::vector<std::string> outcome_labels(const std::set<Outcome>& outcomes) {
  std::vector<std::string> out;
  for (const Outcome& o : outcomes) out.push_back(label(o));
  return out;
}

json metadata(std::optional<std::uint64_t> seed = std::nullopt) {
  json m = {{"version", kVersion}};
  if (seed) {
    m["seed"] = *seed;
    m["rng"] = std::string(kRngAlgorithm);
  }
  return m;
}

struct CommonFlags {
  std::string setup = "fig1";
  std::string model = "pnrd";
  std::string policy = "strict";
  int dim = 4;
  std::string format = "text";
};

void add_setup_flags(CLI::App& cmd, CommonFlags& f, bool with_policy) {
  cmd.add_option("--setup", f.setup, "measurement setup")
      ->check(CLI::IsMember({"fig1", "fig2"}))
      ->capture_default_str();
  cmd.add_option("--model", f.model, "detector model")
      ->check(CLI::IsMember({"pnrd", "threshold"}))
      ->capture_default_str();
  if (with_policy)
    cmd.add_option("--policy", f.policy, "grouping policy")
        ->check(CLI::IsMember(
            {"strict", "loss-conservative", "loss_conservative"}))
        ->capture_default_str();
}

// tables ----------------------------------------------------------------------

void render_table_text(const GroupTable& table, std::ostream& out) {
  out << "setup " << to_string(table.setup) << ", d=" << table.dim
      << ", detectors " << to_string(table.model) << ", policy "
      << to_string(table.policy) << "\n";
  std::size_t width = 6;
  std::vector<std::string> members;
  for (const Group& g : table.groups) {
    members.push_back(join(g.members, ", "));
    width = std::max(width, members.back().size());
  }
  out << std::left << std::setw(7) << "Group" << std::setw(static_cast<int>(width) + 2)
      << "States"
      << "Detection results\n";
  for (std::size_t g = 0; g < table.groups.size(); ++g) {
    std::string id = std::to_string(g + 1);
    if (!table.groups[g].usable) id += "*";
    out << std::left << std::setw(7) << id
        << std::setw(static_cast<int>(width) + 2) << members[g]
        << join(outcome_labels(table.groups[g].support), ", ") << "\n";
  }
  if (table.usable_count() != table.groups.size())
    out << "* unusable: a single click cannot certify two-photon arrival\n";
  out << "groups: " << table.groups.size()
      << ", usable: " << table.usable_count() << "\n";
  out << "capacity: " << fixed(channel_capacity(table), 3)
      << " bits/photon\n";
}

void render_table_csv(const GroupTable& table, std::ostream& out) {
  out << "group,usable,members,outcomes\n";
  for (std::size_t g = 0; g < table.groups.size(); ++g)
    out << g + 1 << "," << (table.groups[g].usable ? "true" : "false") << ",\""
        << join(table.groups[g].members, ";") << "\",\""
        << join(outcome_labels(table.groups[g].support), ";") << "\"\n";
}

int cmd_tables(const CommonFlags& f, std::ostream& out) {
  const GroupTable table =
      classify_bell_states(parse_setup(f.setup), f.dim,
                           parse_detector_model(f.model), parse_policy(f.policy));
  if (f.format == "json") {
    json j = {{"metadata", metadata()},
              {"table", table},
              {"capacity_bits", channel_capacity(table)}};
    out << j.dump(2) << "\n";
  } else if (f.format == "csv") {
    render_table_csv(table, out);
  } else {
    render_table_text(table, out);
  }
  return kExitOk;
}

// verify ----------------------------------------------------------------------

void describe_row(const char* mark, const char* kind, const ReferenceRow& row,
                  std::ostream& out) {
  out << "  " << mark << " " << kind << " group " << row.group << ": members {"
      << join({row.members.begin(), row.members.end()}, ", ")
      << "} outcomes {" << join(outcome_labels(row.outcomes), ", ") << "}\n";
}

int cmd_verify(const std::string& references_dir, const std::string& format,
               std::ostream& out) {
  const std::vector<ReferenceTable> references =
      references_dir.empty() ? embedded_reference_tables()
                             : load_reference_tables(references_dir);

  std::vector<TableDiff> diffs;
  for (const ReferenceTable& ref : references)
    diffs.push_back(diff_tables(
        ref, classify_bell_states(ref.setup, ref.dim, ref.model,
                                  GroupingPolicy::strict)));

  struct Capacity {
    Setup setup;
    DetectorModel model;
    GroupingPolicy policy;
    double bits;
  };
  std::vector<Capacity> capacities;
  for (Setup setup : {Setup::fig1, Setup::fig2})
    for (auto [model, policy] :
         {std::pair{DetectorModel::pnrd, GroupingPolicy::strict},
          std::pair{DetectorModel::threshold,
                    GroupingPolicy::loss_conservative}})
      capacities.push_back(
          {setup, model, policy,
           channel_capacity(classify_bell_states(setup, 4, model, policy))});

  std::size_t matched = 0;
  for (const TableDiff& d : diffs) matched += d.match() ? 1 : 0;

  if (format == "json") {
    json tables = json::array();
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      json missing = json::array();
      json unexpected = json::array();
      for (const ReferenceRow& r : diffs[i].missing)
        missing.push_back({{"group", r.group},
                           {"members", r.members},
                           {"outcomes", outcome_labels(r.outcomes)}});
      for (const ReferenceRow& r : diffs[i].unexpected)
        unexpected.push_back({{"group", r.group},
                              {"members", r.members},
                              {"outcomes", outcome_labels(r.outcomes)}});
      tables.push_back({{"table", diffs[i].table},
                        {"setup", to_string(references[i].setup)},
                        {"match", diffs[i].match()},
                        {"missing", missing},
                        {"unexpected", unexpected}});
    }
    json caps = json::array();
    for (const Capacity& c : capacities)
      caps.push_back({{"setup", to_string(c.setup)},
                      {"model", to_string(c.model)},
                      {"policy", to_string(c.policy)},
                      {"bits", c.bits}});
    out << json{{"metadata", metadata()},
                {"tables", tables},
                {"matched", matched},
                {"total", diffs.size()},
                {"capacities", caps}}
               .dump(2)
        << "\n";
  } else {
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      const TableDiff& d = diffs[i];
      out << "table " << d.table << " (" << to_string(references[i].setup)
          << "): " << (d.match() ? "match" : "MISMATCH") << " ("
          << references[i].rows.size() << " reference rows)\n";
      for (const ReferenceRow& r : d.missing)
        describe_row("-", "reference", r, out);
      for (const ReferenceRow& r : d.unexpected)
        describe_row("+", "computed", r, out);
    }
    out << matched << "/" << diffs.size() << " tables match\n";
    for (const Capacity& c : capacities)
      out << "capacity " << to_string(c.setup) << " " << to_string(c.model)
          << " " << to_string(c.policy) << ": " << fixed(c.bits, 3)
          << " bits/photon\n";
  }
  return matched == diffs.size() ? kExitOk : kExitMismatch;
}

// sample ----------------------------------------------------------------------

int cmd_sample(const CommonFlags& f, const std::string& state_label,
               std::uint64_t shots, std::uint64_t seed, std::ostream& out) {
  const Setup setup = parse_setup(f.setup);
  const BellIndex idx = parse_bell_index(state_label);
  const OutcomeDistribution dist = outcome_distribution(
      evolve(setup_input_state(setup, f.dim, idx), build_setup(setup, f.dim)),
      parse_detector_model(f.model));
  const auto counts = tally(sample(dist, shots, seed));

  struct Row {
    std::string outcome;
    double p;
    std::uint64_t count;
    double freq;
    double z;
  };
  std::vector<Row> rows;
  const double n = static_cast<double>(shots);
  for (const auto& [o, p] : dist.probs) {
    const auto it = counts.find(o);
    const std::uint64_t c = it == counts.end() ? 0 : it->second;
    const double freq = static_cast<double>(c) / n;
    const double sigma = std::sqrt(p * (1.0 - p) / n);
    rows.push_back({label(o), p, c, freq, sigma > 0 ? (freq - p) / sigma : 0.0});
  }

  if (f.format == "json") {
    json freqs = json::array();
    for (const Row& r : rows)
      freqs.push_back({{"outcome", r.outcome},
                       {"probability", r.p},
                       {"count", r.count},
                       {"frequency", r.freq},
                       {"z", r.z}});
    out << json{{"metadata", metadata(seed)},
                {"state", label(idx)},
                {"setup", f.setup},
                {"dim", f.dim},
                {"shots", shots},
                {"distribution", dist},
                {"frequencies", freqs}}
               .dump(2)
        << "\n";
  } else if (f.format == "csv") {
    out << "outcome,probability,count,frequency,z\n";
    for (const Row& r : rows)
      out << r.outcome << "," << fixed(r.p, 12) << "," << r.count << ","
          << fixed(r.freq, 12) << "," << fixed(r.z, 6) << "\n";
  } else {
    out << "state " << label(idx) << ", setup " << f.setup << ", d=" << f.dim
        << ", detectors " << f.model << ", shots " << shots << ", seed "
        << seed << ", rng " << kRngAlgorithm << "\n";
    out << std::left << std::setw(12) << "outcome" << std::setw(14)
        << "probability" << std::setw(10) << "count" << std::setw(12)
        << "frequency"
        << "z\n";
    for (const Row& r : rows)
      out << std::left << std::setw(12) << r.outcome << std::setw(14)
          << fixed(r.p, 6) << std::setw(10) << r.count << std::setw(12)
          << fixed(r.freq, 6) << fixed(r.z, 2) << "\n";
  }
  return kExitOk;
}

// sdc -------------------------------------------------------------------------

int cmd_sdc(const CommonFlags& f, std::uint64_t shots, std::uint64_t seed,
            const std::vector<std::string>& message_labels, std::ostream& out) {
  if (f.dim != 4) throw std::invalid_argument("sdc runs at --dim 4 only");
  SdcConfig config;
  config.setup = parse_setup(f.setup);
  config.model = parse_detector_model(f.model);
  config.policy = parse_policy(f.policy);
  config.seed = seed;
  config.shots = shots;

  std::vector<BellIndex> messages;
  for (const std::string& m : message_labels)
    messages.push_back(parse_bell_index(m));
  if (messages.empty()) messages = bell_indices(4);

  const SdcReport report = run_sdc(config, messages);
  if (f.format == "json") {
    json j = report;
    j["metadata"]["version"] = kVersion;
    j["metadata"]["seed"] = seed;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "superdense coding: setup " << f.setup << ", detectors " << f.model
      << ", policy " << to_string(config.policy) << ", shots " << shots
      << ", seed " << seed << ", rng " << report.rng_algorithm << "\n";
  out << std::left << std::setw(16) << "message" << std::setw(10) << "group"
      << "decoded\n";
  for (const MessageResult& m : report.messages) {
    std::vector<std::string> decoded;
    for (const auto& [g, c] : m.decoded)
      decoded.push_back(std::to_string(g + 1) + ":" + std::to_string(c));
    out << std::left << std::setw(16) << label(m.message) << std::setw(10)
        << m.expected_group + 1 << join(decoded, " ") << "\n";
  }
  out << "usable groups: " << report.usable_groups << "\n";
  out << "accuracy: " << fixed(report.accuracy, 6) << "\n";
  out << "bits/photon: " << fixed(report.bits_per_photon, 3) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Linear-optical four-dimensional Bell-state measurement toolkit",
               "hdbsm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonFlags tables_flags;
  auto* tables = app.add_subcommand(
      "tables", "derive the distinguishable-group table of a setup");
  add_setup_flags(*tables, tables_flags, true);
  tables->add_option("--dim", tables_flags.dim, "path dimension")
      ->check(CLI::IsMember({2, 4}))
      ->capture_default_str();
  tables->add_option("--format", tables_flags.format)
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  std::string references_dir;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand(
      "verify", "recompute both tables and diff them against the references");
  verify->add_option("--references", references_dir,
                     "directory holding table1.json and table2.json "
                     "(default: compiled-in copies)")
      ->check(CLI::ExistingDirectory);
  verify->add_option("--format", verify_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CommonFlags sample_flags;
  std::string state_label;
  std::uint64_t sample_shots = 100000;
  std::uint64_t sample_seed = 0;
  auto* sample_cmd = app.add_subcommand(
      "sample", "Monte Carlo detection statistics of one Bell state");
  add_setup_flags(*sample_cmd, sample_flags, false);
  sample_cmd->add_option("--state", state_label, "Bell label j,n,m")
      ->required();
  sample_cmd->add_option("--shots", sample_shots)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample_cmd->add_option("--seed", sample_seed)->capture_default_str();
  sample_cmd->add_option("--dim", sample_flags.dim, "path dimension")
      ->check(CLI::IsMember({2, 4}))
      ->capture_default_str();
  sample_cmd->add_option("--format", sample_flags.format)
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  CommonFlags sdc_flags;
  std::uint64_t sdc_shots = 1000;
  std::uint64_t sdc_seed = 0;
  std::vector<std::string> sdc_messages;
  auto* sdc = app.add_subcommand(
      "sdc", "superdense-coding round trip over the encoding unitaries");
  add_setup_flags(*sdc, sdc_flags, true);
  sdc->add_option("--shots", sdc_shots)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sdc->add_option("--seed", sdc_seed)->capture_default_str();
  sdc->add_option("--dim", sdc_flags.dim, "path dimension")
      ->check(CLI::IsMember({4}))
      ->capture_default_str();
  sdc->add_option("--message", sdc_messages,
                  "message label j,n,m (repeatable; default: all 16)");
  sdc->add_option("--format", sdc_flags.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("hdbsm");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (tables->parsed()) return cmd_tables(tables_flags, out);
    if (verify->parsed()) return cmd_verify(references_dir, verify_format, out);
    if (sample_cmd->parsed())
      return cmd_sample(sample_flags, state_label, sample_shots, sample_seed,
                        out);
    if (sdc->parsed())
      return cmd_sdc(sdc_flags, sdc_shots, sdc_seed, sdc_messages, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hdbsm
