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

#include "hdbsm/mode.hpp"

#include <stdexcept>

namespace hdbsm {
namespace {

int pol_slot(Pol pol) {
  switch (pol) {
    case Pol::none:
    case Pol::H:
    case Pol::plus:
      return 0;
    case Pol::V:
    case Pol::minus:
      return 1;
  }
  return 0;
}

bool pol_fits(Pol pol, PolBasis basis) {
  switch (basis) {
    case PolBasis::none:
      return pol == Pol::none;
    case PolBasis::linear:
      return pol == Pol::H || pol == Pol::V;
    case PolBasis::diagonal:
      return pol == Pol::plus || pol == Pol::minus;
  }
  return false;
}

}  // namespace

ModeSpace::ModeSpace(int dim, PolBasis basis) : dim_(dim), basis_(basis) {
  if (dim < 1) throw std::domain_error("mode space dimension must be positive");
}

int ModeSpace::index(const Mode& mode) const {
  if (mode.path < 0 || mode.path >= dim_)
    throw std::domain_error("path index " + std::to_string(mode.path) +
                            " outside dimension " + std::to_string(dim_));
  if (!pol_fits(mode.pol, basis_))
    throw std::domain_error("mode " + label(mode) +
                            " has a polarization foreign to this mode space");
  const int arm = mode.arm == Arm::first ? 0 : 1;
  return (arm * dim_ + mode.path) * pol_levels() + pol_slot(mode.pol);
}

Mode ModeSpace::mode(int index) const {
  if (index < 0 || index >= size())
    throw std::out_of_range("mode index out of range");
  Mode m;
  const int slot = index % pol_levels();
  const int rest = index / pol_levels();
  m.arm = rest / dim_ == 0 ? Arm::first : Arm::second;
  m.path = rest % dim_;
  switch (basis_) {
    case PolBasis::none:
      m.pol = Pol::none;
      break;
    case PolBasis::linear:
      m.pol = slot == 0 ? Pol::H : Pol::V;
      break;
    case PolBasis::diagonal:
      m.pol = slot == 0 ? Pol::plus : Pol::minus;
      break;
  }
  return m;
}

std::vector<Mode> ModeSpace::modes() const {
  std::vector<Mode> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out.push_back(mode(i));
  return out;
}

std::string label(const Mode& mode) {
  std::string s = mode.arm == Arm::first ? "A" : "B";
  s += std::to_string(mode.path);
  switch (mode.pol) {
    case Pol::none:
      break;
    case Pol::H:
      s += 'H';
      break;
    case Pol::V:
      s += 'V';
      break;
    case Pol::plus:
      s += '+';
      break;
    case Pol::minus:
      s += '-';
      break;
  }
  return s;
}

Mode parse_mode(const std::string& text) {
  const auto fail = [&] {
    throw std::invalid_argument("malformed detector label '" + text + "'");
  };
  if (text.size() < 2) fail();
  Mode m;
  if (text[0] == 'A' || text[0] == 'a')
    m.arm = Arm::first;
  else if (text[0] == 'B' || text[0] == 'b')
    m.arm = Arm::second;
  else
    fail();
  std::size_t pos = 1;
  int path = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    path = path * 10 + (text[pos] - '0');
    if (path > 1'000'000) fail();
    ++pos;
  }
  if (pos == 1) fail();
  m.path = path;
  if (pos == text.size()) {
    m.pol = Pol::none;
  } else if (pos + 1 == text.size()) {
    switch (text[pos]) {
      case '+':
        m.pol = Pol::plus;
        break;
      case '-':
        m.pol = Pol::minus;
        break;
      case 'H':
        m.pol = Pol::H;
        break;
      case 'V':
        m.pol = Pol::V;
        break;
      default:
        fail();
    }
  } else {
    fail();
  }
  return m;
}

}  // namespace hdbsm
