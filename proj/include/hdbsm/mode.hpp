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

#ifndef HDBSM_MODE_HPP
#define HDBSM_MODE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace hdbsm {

// Before the network the arms are the photons A and B; after it they are the
// output ports a and b. Both render as "A"/"B" in detector labels.
enum class Arm { first = 0, second = 1 };

// H/V label modes before the 45-degree analyser, plus/minus after it.
enum class Pol { none, H, V, plus, minus };

enum class PolBasis { none, linear, diagonal };

struct Mode {
  Arm arm = Arm::first;
  int path = 0;
  Pol pol = Pol::none;

  friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// The single-photon mode set of a setup: two arms, `dim` paths per arm and
/// optionally a two-level polarization. Modes are indexed in (arm, path, pol)
/// order, which is also the canonical pair order used by TwoPhotonState.
class ModeSpace {
 public:
  ModeSpace() = default;
  ModeSpace(int dim, PolBasis basis);

  static ModeSpace paths(int dim) { return {dim, PolBasis::none}; }
  static ModeSpace polarized(int dim) { return {dim, PolBasis::linear}; }

  int dim() const { return dim_; }
  PolBasis basis() const { return basis_; }
  bool has_polarization() const { return basis_ != PolBasis::none; }
  int pol_levels() const { return has_polarization() ? 2 : 1; }
  int size() const { return 2 * dim_ * pol_levels(); }

  /// Same layout and basis labels.
  friend bool operator==(const ModeSpace&, const ModeSpace&) = default;
  /// Same layout regardless of the polarization basis labels.
  bool same_layout(const ModeSpace& other) const {
    return dim_ == other.dim_ && pol_levels() == other.pol_levels();
  }

  ModeSpace with_basis(PolBasis basis) const { return {dim_, basis}; }

  int index(const Mode& mode) const;
  /// Index by polarization slot (0 for H/+ or unpolarized, 1 for V/-).
  int slot_index(Arm arm, int path, int slot) const {
    return ((arm == Arm::first ? 0 : 1) * dim_ + path) * pol_levels() + slot;
  }
  Mode mode(int index) const;
  std::vector<Mode> modes() const;

 private:
  int dim_ = 0;
  PolBasis basis_ = PolBasis::none;
};

/// "A0", "B3", "A2+", "B1-", "A0H" ...
std::string label(const Mode& mode);
/// Inverse of label(); throws std::invalid_argument on malformed text.
Mode parse_mode(const std::string& text);

}  // namespace hdbsm

#endif  // HDBSM_MODE_HPP
