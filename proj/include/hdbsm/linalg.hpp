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

#ifndef HDBSM_LINALG_HPP
#define HDBSM_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <limits>

namespace hdbsm {

using Scalar = std::complex<double>;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kPruneThreshold = 1e-12;

/// Largest entrywise deviation of U * U^dagger from the identity.
template <typename Derived>
typename Derived::RealScalar unitarity_error(
    const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  if (u.rows() != u.cols())
    return std::numeric_limits<typename Derived::RealScalar>::infinity();
  const Plain product = u * u.adjoint();
  return (product - Plain::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u,
                double tol = kUnitarityTolerance) {
  return unitarity_error(u) <= tol;
}

/// Two-photon evolution on a symmetric amplitude matrix: psi' = U psi U^T,
/// i.e. psi'(o1, o2) = sum U(o1, i1) U(o2, i2) psi(i1, i2).
template <typename DerivedU, typename DerivedPsi>
auto evolve_amplitudes(const Eigen::MatrixBase<DerivedU>& u,
                       const Eigen::MatrixBase<DerivedPsi>& psi) {
  return u * psi * u.transpose();
}

/// Kronecker product, left factor major.
template <typename Derived>
typename Derived::PlainObject kron(const Eigen::MatrixBase<Derived>& left,
                                   const Eigen::MatrixBase<Derived>& right) {
  typename Derived::PlainObject out(left.rows() * right.rows(),
                                    left.cols() * right.cols());
  for (Eigen::Index i = 0; i < left.rows(); ++i)
    for (Eigen::Index j = 0; j < left.cols(); ++j)
      out.block(i * right.rows(), j * right.cols(), right.rows(),
                right.cols()) = left(i, j) * right;
  return out;
}

}  // namespace hdbsm

#endif  // HDBSM_LINALG_HPP
