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

#include "hdbsm/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace hdbsm {

std::string to_string(Setup setup) {
  return setup == Setup::fig1 ? "fig1" : "fig2";
}

Setup parse_setup(const std::string& text) {
  if (text == "fig1") return Setup::fig1;
  if (text == "fig2") return Setup::fig2;
  throw std::invalid_argument("unknown setup '" + text + "'");
}

std::string to_string(Stage stage) {
  switch (stage) {
    case Stage::bs_hadamard:
      return "bs_hadamard";
    case Stage::pbs0_route:
      return "pbs0_route";
    case Stage::pbs45_basis_change:
      return "pbs45_basis_change";
  }
  return "?";
}

NetworkSpec network_spec(Setup setup, int dim) {
  if (setup == Setup::fig1) return {setup, dim, {Stage::bs_hadamard}};
  return {setup,
          dim,
          {Stage::pbs0_route, Stage::bs_hadamard, Stage::pbs45_basis_change}};
}

ModeSpace input_space(Setup setup, int dim) {
  return setup == Setup::fig1 ? ModeSpace::paths(dim)
                              : ModeSpace::polarized(dim);
}

SinglePhotonUnitary stage_unitary(Stage stage, const ModeSpace& input,
                                  SplitterConvention convention) {
  const int size = input.size();
  const double r = std::sqrt(0.5);
  Matrix u = Matrix::Zero(size, size);

  switch (stage) {
    case Stage::bs_hadamard: {
      const double sign = convention == SplitterConvention::standard ? 1 : -1;
      for (int path = 0; path < input.dim(); ++path) {
        for (int slot = 0; slot < input.pol_levels(); ++slot) {
          const int a = input.slot_index(Arm::first, path, slot);
          const int b = input.slot_index(Arm::second, path, slot);
          // Column = input mode, row = output mode.
          u(a, a) = r;
          u(b, a) = sign * r;
          u(a, b) = r;
          u(b, b) = -sign * r;
        }
      }
      return {input, u};
    }
    case Stage::pbs0_route: {
      if (input.basis() != PolBasis::linear)
        throw std::domain_error("pbs0_route acts on H/V polarized modes");
      if (input.dim() % 2 != 0)
        throw std::domain_error("pbs0_route pairs paths; dimension must be even");
      for (Arm arm : {Arm::first, Arm::second}) {
        for (int path = 0; path < input.dim(); ++path) {
          const int h = input.index({arm, path, Pol::H});
          const int v_in = input.index({arm, path, Pol::V});
          const int v_out = input.index({arm, path ^ 1, Pol::V});
          u(h, h) = 1.0;
          u(v_out, v_in) = 1.0;
        }
      }
      return {input, u};
    }
    case Stage::pbs45_basis_change: {
      if (input.basis() != PolBasis::linear)
        throw std::domain_error("pbs45 analyser expects H/V polarized modes");
      const ModeSpace output = input.with_basis(PolBasis::diagonal);
      for (Arm arm : {Arm::first, Arm::second}) {
        for (int path = 0; path < input.dim(); ++path) {
          const int h = input.index({arm, path, Pol::H});
          const int v = input.index({arm, path, Pol::V});
          const int p = output.index({arm, path, Pol::plus});
          const int m = output.index({arm, path, Pol::minus});
          u(p, h) = r;
          u(m, h) = r;
          u(p, v) = r;
          u(m, v) = -r;
        }
      }
      return {input, output, u};
    }
  }
  throw std::logic_error("unhandled stage");
}

SinglePhotonUnitary build_network(const NetworkSpec& spec,
                                  SplitterConvention convention) {
  if (spec.dim < 2) throw std::domain_error("network dimension must be >= 2");
  SinglePhotonUnitary net =
      SinglePhotonUnitary::identity(input_space(spec.setup, spec.dim));
  for (Stage stage : spec.stages)
    net = stage_unitary(stage, net.output(), convention).after(net);
  return net;
}

SinglePhotonUnitary build_fig1_network(int dim, SplitterConvention convention) {
  return build_network(network_spec(Setup::fig1, dim), convention);
}

SinglePhotonUnitary build_fig2_network(int dim, SplitterConvention convention) {
  return build_network(network_spec(Setup::fig2, dim), convention);
}

SinglePhotonUnitary build_setup(Setup setup, int dim) {
  return build_network(network_spec(setup, dim));
}

TwoPhotonState setup_input_state(Setup setup, int dim, const BellIndex& idx) {
  if (setup == Setup::fig1) return make_bell_state(dim, idx);
  if (dim != 4)
    throw std::domain_error("the polarization-assisted setup needs d = 4");
  return make_hyper_state(idx);
}

TwoPhotonState reference_state(Setup setup, int dim) {
  return setup_input_state(setup, dim, {0, 0, 0});
}

TwoPhotonState evolve(const TwoPhotonState& state,
                      const SinglePhotonUnitary& network) {
  if (state.space() != network.input())
    throw std::domain_error("state and network act on different mode spaces");
  return TwoPhotonState::from_amplitudes(
      network.output(), evolve_amplitudes(network.matrix(), state.to_matrix()));
}

}  // namespace hdbsm
