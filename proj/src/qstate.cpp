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

#include "hdbsm/qstate.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>

namespace hdbsm {
namespace {

void require_bell_dimension(int d) {
  if (d != 2 && d != 4)
    throw std::domain_error("Bell states are defined for d = 2 or d = 4, got " +
                            std::to_string(d));
}

}  // namespace

void validate(const BellIndex& idx, int d) {
  require_bell_dimension(d);
  if (idx.j < 0 || idx.j >= d || idx.n < 0 || idx.n > 1 || idx.m < 0 ||
      idx.m > 1 || (d == 2 && idx.m != 0))
    throw std::domain_error("invalid Bell index " + label(idx) +
                            " for dimension " + std::to_string(d));
}

std::vector<BellIndex> bell_indices(int d) {
  require_bell_dimension(d);
  std::vector<BellIndex> out;
  const int m_max = d == 2 ? 1 : 2;
  for (int j = 0; j < d; ++j)
    for (int m = 0; m < m_max; ++m)
      for (int n = 0; n < 2; ++n) out.push_back({j, n, m});
  return out;
}

std::string label(const BellIndex& idx) {
  return "psi[" + std::to_string(idx.j) + "][" + std::to_string(idx.n) +
         "][" + std::to_string(idx.m) + "]";
}

BellIndex parse_bell_index(const std::string& text) {
  static const std::regex bracketed(R"(psi\[(\d+)\]\[(\d+)\]\[(\d+)\])");
  static const std::regex csv(R"(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*)");
  std::smatch match;
  if (std::regex_match(text, match, bracketed) ||
      std::regex_match(text, match, csv))
    return {std::stoi(match[1]), std::stoi(match[2]), std::stoi(match[3])};
  throw std::invalid_argument("cannot parse Bell label '" + text +
                              "' (expected \"j,n,m\" or \"psi[j][n][m]\")");
}

// SinglePhotonUnitary ---------------------------------------------------------

SinglePhotonUnitary::SinglePhotonUnitary(ModeSpace input, ModeSpace output,
                                         Matrix entries)
    : input_(input), output_(output), entries_(std::move(entries)) {
  if (!input_.same_layout(output_))
    throw std::domain_error("network input and output layouts differ");
  if (entries_.rows() != input_.size() || entries_.cols() != input_.size())
    throw std::domain_error("network matrix does not match mode space size");
  if (!is_unitary(entries_))
    throw std::domain_error("network matrix is not unitary (error " +
                            std::to_string(unitarity_error(entries_)) + ")");
}

SinglePhotonUnitary SinglePhotonUnitary::identity(const ModeSpace& space) {
  return {space, Matrix::Identity(space.size(), space.size())};
}

SinglePhotonUnitary SinglePhotonUnitary::after(
    const SinglePhotonUnitary& first) const {
  if (!first.output_.same_layout(input_))
    throw std::domain_error("cannot compose networks over different modes");
  return {first.input_, output_, entries_ * first.entries_};
}

SinglePhotonUnitary SinglePhotonUnitary::inverse() const {
  return {output_, input_, entries_.adjoint()};
}

// TwoPhotonState --------------------------------------------------------------

TwoPhotonState TwoPhotonState::from_amplitudes(const ModeSpace& space,
                                               const Matrix& psi) {
  if (psi.rows() != space.size() || psi.cols() != space.size())
    throw std::domain_error("amplitude matrix does not match mode space");
  TwoPhotonState s(space);
  for (int i = 0; i < space.size(); ++i)
    for (int j = i; j < space.size(); ++j)
      if (std::abs(psi(i, j)) >= kPruneThreshold) s.amps_[{i, j}] = psi(i, j);
  return s;
}

TwoPhotonState TwoPhotonState::from_terms(const ModeSpace& space,
                                          std::span<const CreationTerm> terms) {
  // a+_i a+_j |0> is the symmetrized vector (|ij> + |ji>)/sqrt(2) for i != j
  // and sqrt(2)|ii> for i == j.
  Matrix psi = Matrix::Zero(space.size(), space.size());
  const double r = std::sqrt(0.5);
  for (const CreationTerm& t : terms) {
    const int i = space.index(t.first);
    const int j = space.index(t.second);
    if (i == j) {
      psi(i, i) += t.coeff * std::sqrt(2.0);
    } else {
      psi(i, j) += t.coeff * r;
      psi(j, i) += t.coeff * r;
    }
  }
  return from_amplitudes(space, psi);
}

Scalar TwoPhotonState::amplitude(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto it = amps_.find({i, j});
  return it == amps_.end() ? Scalar{} : it->second;
}

Matrix TwoPhotonState::to_matrix() const {
  Matrix psi = Matrix::Zero(space_.size(), space_.size());
  for (const auto& [key, amp] : amps_) {
    psi(key.first, key.second) = amp;
    psi(key.second, key.first) = amp;
  }
  return psi;
}

double TwoPhotonState::norm_squared() const {
  double total = 0.0;
  for (const auto& [key, amp] : amps_)
    total += (key.first == key.second ? 1.0 : 2.0) * std::norm(amp);
  return total;
}

TwoPhotonState TwoPhotonState::normalized() const {
  const double norm = std::sqrt(norm_squared());
  if (norm == 0.0) throw std::domain_error("cannot normalize the zero state");
  TwoPhotonState s(space_);
  for (const auto& [key, amp] : amps_) s.amps_[key] = amp / norm;
  return s;
}

Scalar inner_product(const TwoPhotonState& a, const TwoPhotonState& b) {
  if (!a.space().same_layout(b.space()))
    throw std::domain_error("inner product across different mode spaces");
  Scalar total{};
  for (const auto& [key, amp] : a.amplitudes()) {
    const double weight = key.first == key.second ? 1.0 : 2.0;
    total += weight * std::conj(amp) * b.amplitude(key.first, key.second);
  }
  return total;
}

bool equal_up_to_global_phase(const TwoPhotonState& a, const TwoPhotonState& b,
                              double tol) {
  if (!a.space().same_layout(b.space())) return false;
  if (a.amplitudes().empty() || b.amplitudes().empty())
    return a.amplitudes().empty() && b.amplitudes().empty();

  auto largest = a.amplitudes().begin();
  for (auto it = a.amplitudes().begin(); it != a.amplitudes().end(); ++it)
    if (std::abs(it->second) > std::abs(largest->second)) largest = it;
  const Scalar other = b.amplitude(largest->first.first, largest->first.second);
  if (std::abs(other) < tol) return false;
  // Rotate b so that its amplitude on a's reference pair has a's phase.
  const Scalar rotation =
      (largest->second / std::abs(largest->second)) / (other / std::abs(other));

  const Matrix diff = a.to_matrix() - rotation * b.to_matrix();
  return diff.cwiseAbs().maxCoeff() <= tol;
}

// Bell states -----------------------------------------------------------------

int partner_path(int j, int x) { return x ^ j; }

double bell_sign(const BellIndex& idx, int x) {
  const int exponent = idx.n * (x & 1) + idx.m * ((x >> 1) & 1);
  return exponent % 2 == 0 ? 1.0 : -1.0;
}

TwoPhotonState make_bell_state(int d, const BellIndex& idx) {
  validate(idx, d);
  const ModeSpace space = ModeSpace::paths(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<CreationTerm> terms;
  for (int x = 0; x < d; ++x)
    terms.push_back({{Arm::first, x, Pol::none},
                     {Arm::second, partner_path(idx.j, x), Pol::none},
                     scale * bell_sign(idx, x)});
  return TwoPhotonState::from_terms(space, terms);
}

TwoPhotonState make_hyper_state(const BellIndex& idx) {
  constexpr int d = 4;
  validate(idx, d);
  const ModeSpace space = ModeSpace::polarized(d);
  const double scale = 0.5 * std::sqrt(0.5);
  std::vector<CreationTerm> terms;
  for (int x = 0; x < d; ++x)
    for (Pol pol : {Pol::H, Pol::V})
      terms.push_back({{Arm::first, x, pol},
                       {Arm::second, partner_path(idx.j, x), pol},
                       scale * bell_sign(idx, x)});
  return TwoPhotonState::from_terms(space, terms);
}

Matrix encoding_unitary(int d, const BellIndex& idx) {
  validate(idx, d);
  Matrix u = Matrix::Zero(d, d);
  for (int x = 0; x < d; ++x) u(partner_path(idx.j, x), x) = bell_sign(idx, x);
  return u;
}

SinglePhotonUnitary on_arm(const ModeSpace& space, Arm arm,
                           const Matrix& path_op) {
  if (path_op.rows() != space.dim() || path_op.cols() != space.dim())
    throw std::domain_error("path operator dimension does not match modes");
  Matrix selector = Matrix::Zero(2, 2);
  selector(arm == Arm::first ? 0 : 1, arm == Arm::first ? 0 : 1) = 1.0;
  const Matrix rest = Matrix::Identity(2, 2) - selector;
  const Matrix pol_identity = Matrix::Identity(space.pol_levels(),
                                               space.pol_levels());
  const Matrix path_identity = Matrix::Identity(space.dim(), space.dim());
  const Matrix lifted =
      kron(selector, Matrix(kron(path_op, pol_identity))) +
      kron(rest, Matrix(kron(path_identity, pol_identity)));
  return {space, lifted};
}

TwoPhotonState encode(const TwoPhotonState& state, const BellIndex& idx,
                      Arm which) {
  const SinglePhotonUnitary u =
      on_arm(state.space(), which, encoding_unitary(state.dim(), idx));
  return TwoPhotonState::from_amplitudes(
      state.space(), evolve_amplitudes(u.matrix(), state.to_matrix()));
}

}  // namespace hdbsm
