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

#ifndef HDBSM_QSTATE_HPP
#define HDBSM_QSTATE_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hdbsm/linalg.hpp"
#include "hdbsm/mode.hpp"

namespace hdbsm {

/// Label of |psi^m_jn>: pairing class j, phase exponent n, sign exponent m.
struct BellIndex {
  int j = 0;
  int n = 0;
  int m = 0;

  friend auto operator<=>(const BellIndex&, const BellIndex&) = default;
};

/// Throws std::domain_error unless idx names a Bell state in dimension d.
/// Supported dimensions are 2 and 4; for d = 2 the sign exponent m is fixed
/// to 0.
void validate(const BellIndex& idx, int d);

/// All Bell indices of dimension d in (j, m, n) enumeration order.
std::vector<BellIndex> bell_indices(int d);

/// "psi[j][n][m]"
std::string label(const BellIndex& idx);
/// Accepts "psi[j][n][m]" or "j,n,m".
BellIndex parse_bell_index(const std::string& text);

/// A passive linear-optical map between two single-photon mode spaces.
/// Construction checks shape and unitarity.
class SinglePhotonUnitary {
 public:
  SinglePhotonUnitary(ModeSpace input, ModeSpace output, Matrix entries);
  SinglePhotonUnitary(ModeSpace space, Matrix entries)
      : SinglePhotonUnitary(space, space, std::move(entries)) {}

  static SinglePhotonUnitary identity(const ModeSpace& space);

  const ModeSpace& input() const { return input_; }
  const ModeSpace& output() const { return output_; }
  const Matrix& matrix() const { return entries_; }
  int size() const { return static_cast<int>(entries_.rows()); }

  /// this applied after `first`.
  SinglePhotonUnitary after(const SinglePhotonUnitary& first) const;
  SinglePhotonUnitary inverse() const;

 private:
  ModeSpace input_;
  ModeSpace output_;
  Matrix entries_;
};

/// Creation-operator term coeff * a^dagger_first a^dagger_second |vac>.
struct CreationTerm {
  Mode first;
  Mode second;
  Scalar coeff;
};

/// Bosonic two-photon state stored as a symmetric amplitude function psi over
/// unordered mode pairs (i <= j by mode index). The first-quantized vector is
/// sum_{i,j} psi(i,j) |i>|j>, so a pair {i != j} carries weight 2|psi(i,j)|^2
/// and a doubly occupied mode {i,i} carries |psi(i,i)|^2.
class TwoPhotonState {
 public:
  using Key = std::pair<int, int>;

  explicit TwoPhotonState(ModeSpace space) : space_(space) {}

  /// From a dense symmetric amplitude matrix; the upper triangle is read.
  static TwoPhotonState from_amplitudes(const ModeSpace& space,
                                        const Matrix& psi);
  /// Sum of creation terms, not normalized.
  static TwoPhotonState from_terms(const ModeSpace& space,
                                   std::span<const CreationTerm> terms);

  const ModeSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  const std::map<Key, Scalar>& amplitudes() const { return amps_; }

  /// Symmetric extension psi(i, j).
  Scalar amplitude(int i, int j) const;
  Scalar amplitude(const Mode& a, const Mode& b) const {
    return amplitude(space_.index(a), space_.index(b));
  }

  Matrix to_matrix() const;
  double norm_squared() const;
  TwoPhotonState normalized() const;

 private:
  ModeSpace space_;
  std::map<Key, Scalar> amps_;
};

/// <a|b> over the first-quantized vectors.
Scalar inner_product(const TwoPhotonState& a, const TwoPhotonState& b);

/// Equality after removing the global phase fixed by the largest-magnitude
/// amplitude of `a`.
bool equal_up_to_global_phase(const TwoPhotonState& a,
                              const TwoPhotonState& b, double tol = 1e-9);

/// Index of the partner path paired with x in class j (XOR pairing).
int partner_path(int j, int x);
/// Coefficient sign of the |x, partner(x)> component: (-1)^(n*bit0 + m*bit1).
double bell_sign(const BellIndex& idx, int x);

/// |psi^m_jn>_AB over unpolarized path modes, normalized.
TwoPhotonState make_bell_state(int d, const BellIndex& idx);

/// |psi^m_jn> (x) (|HH> + |VV>)/sqrt(2) over 4 paths with polarization.
TwoPhotonState make_hyper_state(const BellIndex& idx);

/// The d x d path operator U^m_jn = sum_x sign(x) |partner(x)><x|.
Matrix encoding_unitary(int d, const BellIndex& idx);

/// Lift a path operator to one arm of a mode space, identity on the other arm
/// and on polarization.
SinglePhotonUnitary on_arm(const ModeSpace& space, Arm arm,
                           const Matrix& path_op);

/// Apply U^m_jn to the photon travelling in arm `which`.
TwoPhotonState encode(const TwoPhotonState& state, const BellIndex& idx,
                      Arm which = Arm::second);

}  // namespace hdbsm

#endif  // HDBSM_QSTATE_HPP
