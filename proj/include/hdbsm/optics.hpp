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

#ifndef HDBSM_OPTICS_HPP
#define HDBSM_OPTICS_HPP

#include <string>
#include <vector>

#include "hdbsm/qstate.hpp"

namespace hdbsm {

enum class Setup { fig1, fig2 };

std::string to_string(Setup setup);
Setup parse_setup(const std::string& text);

enum class Stage {
  bs_hadamard,         // 50:50 beam splitter between arms, per path (and pol)
  pbs0_route,          // 0-degree PBS pair: V of path x exits in path x^1
  pbs45_basis_change,  // 45-degree PBS: H/V relabelled to +/- detectors
};

std::string to_string(Stage stage);

/// Which arm picks up the minus sign in the beam splitter. `standard` is
/// A -> (a + b)/sqrt2, B -> (a - b)/sqrt2.
enum class SplitterConvention { standard, swapped };

struct NetworkSpec {
  Setup setup = Setup::fig1;
  int dim = 4;
  std::vector<Stage> stages;
};

/// Stage list of a setup: fig1 is a single beam splitter; fig2 is
/// pbs0_route, bs_hadamard, pbs45_basis_change.
NetworkSpec network_spec(Setup setup, int dim = 4);

/// Input mode space of a setup (fig2 carries polarization).
ModeSpace input_space(Setup setup, int dim);

SinglePhotonUnitary stage_unitary(
    Stage stage, const ModeSpace& input,
    SplitterConvention convention = SplitterConvention::standard);

SinglePhotonUnitary build_network(
    const NetworkSpec& spec,
    SplitterConvention convention = SplitterConvention::standard);

SinglePhotonUnitary build_fig1_network(
    int dim, SplitterConvention convention = SplitterConvention::standard);

SinglePhotonUnitary build_fig2_network(
    int dim = 4, SplitterConvention convention = SplitterConvention::standard);

SinglePhotonUnitary build_setup(Setup setup, int dim);

/// Reference state the receiver prepares: |psi^0_00> for fig1, the
/// hyperentangled |psi^0_00> (x) |phi> for fig2.
TwoPhotonState reference_state(Setup setup, int dim);

/// Bell state idx as it enters the given setup (with the polarization
/// ancilla for fig2).
TwoPhotonState setup_input_state(Setup setup, int dim, const BellIndex& idx);

/// Push a two-photon state through a network with bosonic statistics.
TwoPhotonState evolve(const TwoPhotonState& state,
                      const SinglePhotonUnitary& network);

}  // namespace hdbsm

#endif  // HDBSM_OPTICS_HPP
