// Copyright 2026 The oqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OQW_LINALG_HPP_
#define OQW_LINALG_HPP_

#include <complex>

#include <Eigen/Dense>

#include "oqw/errors.hpp"

namespace oqw {

using complex_t = std::complex<double>;
using cmatrix = Eigen::MatrixXcd;
using cvector = Eigen::VectorXcd;

/// Joint orthonormal eigenbasis of a commuting pair of normal operators
/// (B, C). Column i of `basis` holds |b_i>, with
///
///   B |b_i> = lambda[i] |b_i>,   C |b_i> = phi[i] |b_i>.
///
/// Columns are ordered by |lambda| descending so that a fully trapped
/// eigenstate (|lambda| = 1), when present, comes first.
struct SpectralDecomposition {
  cmatrix basis;
  cvector lambda;
  cvector phi;

  Eigen::Index dim() const { return basis.cols(); }
};

struct JointDiagOptions {
  /// Eigenvalues closer than this are treated as one degenerate cluster.
  double cluster_tol = 1e-8;
  /// Largest accepted residual for orthonormality and for reassembling
  /// B and C from the returned basis and eigenvalues.
  double reconstruction_tol = 1e-10;
};

/// Largest entry magnitude, max_ij |m_ij|.
double max_abs(const cmatrix &m);

/// Max-entry magnitude of BC - CB.
/// Throws std::invalid_argument on dimension mismatch.
double commutator_norm(const cmatrix &b, const cmatrix &c);

/// True iff ||M M^dag - M^dag M||_max <= tol.
bool is_normal(const cmatrix &m, double tol);

/// True iff ||M - M^dag||_max <= tol.
bool is_hermitian(const cmatrix &m, double tol);

/// Smallest eigenvalue of a Hermitian matrix. Closed-form for dim <= 3,
/// iterative beyond.
double min_eigenvalue(const cmatrix &hermitian);

/// Simultaneously diagonalizes a commuting pair of normal matrices.
///
/// Strategy: split the basis by the spectrum of B (Hermitian and
/// anti-Hermitian parts in turn, clustering eigenvalues at
/// `options.cluster_tol`), then refine each cluster by the restriction
/// of C. Eigenvalues are read back as Rayleigh quotients on the final
/// basis, which keeps the (lambda_i, phi_i) pairing consistent per
/// vector.
///
/// Throws CommutationError if commutator_norm(b, c) > tol,
/// NonNormalError if either input fails is_normal(., tol), and
/// DecompositionError if the result misses `options.reconstruction_tol`.
SpectralDecomposition joint_eigendecomposition(const cmatrix &b,
                                               const cmatrix &c, double tol,
                                               const JointDiagOptions &options = {});

/// Worst residual over the decomposition's basis contracts:
/// orthonormality max|<b_i|b_j> - delta_ij| and reconstruction
/// ||X - sum_i x_i |b_i><b_i| ||_max for X in {B, C}.
double decomposition_residual(const SpectralDecomposition &d, const cmatrix &b,
                              const cmatrix &c);

/// Largest | |lambda_i|^2 + |phi_i|^2 - 1 | over the spectrum. Zero for
/// the decomposition of a trace-preserving coin pair.
double spectral_normalization_residual(const SpectralDecomposition &d);

} // namespace oqw

#endif // OQW_LINALG_HPP_
