// Copyright 2026 The dotent Authors.
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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dotent/basis.hpp"
#include "dotent/potential.hpp"
#include "dotent/quadrature.hpp"

namespace dotent {

/// Bijection between unordered orbital pairs a <= b < M and linear indices
/// 0..D-1, D = M(M+1)/2, in row-major upper-triangle order.
class PairIndex {
 public:
  explicit PairIndex(int M);

  int orbitals() const { return M_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(pairs_.size()); }

  /// Order-insensitive: index(a, b) == index(b, a).
  Eigen::Index index(int a, int b) const {
    if (a > b) std::swap(a, b);
    return offsets_[a] + (b - a);
  }

  std::pair<int, int> pair(Eigen::Index k) const { return pairs_[k]; }

 private:
  int M_;
  std::vector<Eigen::Index> offsets_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Kinetic and potential parts of the single-particle Hamiltonian in the
/// oscillator basis.
struct OneBodyParts {
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd potential;

  Eigen::MatrixXd total() const { return kinetic + potential; }
};

/// <m|V|n> by breakpoint-split composite quadrature over the truncated
/// domain. Exactly symmetric; entries with m + n odd are exactly zero
/// because V is even.
Eigen::MatrixXd potential_matrix(const BasisSpec& basis,
                                 const PotentialParams& params,
                                 const QuadSpec& quad);

/// Checks coverage, then builds both parts.
OneBodyParts one_body_parts(const BasisSpec& basis,
                            const PotentialParams& params,
                            const QuadSpec& quad, double coverage_factor);

Eigen::MatrixXd one_body_matrix(const BasisSpec& basis,
                                const PotentialParams& params,
                                const QuadSpec& quad, double coverage_factor);

/// Largest change of any potential-matrix element, relative to the largest
/// element, when panels_per_interval is doubled.
double potential_refinement_change(const BasisSpec& basis,
                                   const PotentialParams& params,
                                   const QuadSpec& quad);

/// I_abcd = integral of phi_a phi_b phi_c phi_d, the matrix elements of the
/// contact interaction. Stored once per sorted index quadruple.
class InteractionTensor {
 public:
  explicit InteractionTensor(const BasisSpec& basis);

  int orbitals() const { return M_; }

  double operator()(int a, int b, int c, int d) const;

  /// Number of stored (unique) entries, C(M+3, 4).
  std::size_t stored() const { return values_.size(); }

 private:
  static std::size_t key(int a, int b, int c, int d);

  int M_;
  std::vector<double> values_;
};

/// Two-electron Hamiltonian in the normalized symmetric pair basis
/// Phi_ab = (phi_a phi_b + phi_b phi_a) / sqrt(2 (1 + delta_ab)).
/// Exactly symmetric. Throws NumericalError on a dimension mismatch.
Eigen::MatrixXd assemble_two_body(const Eigen::MatrixXd& h,
                                  const InteractionTensor& interaction,
                                  double lambda, const PairIndex& idx);

/// Pair-basis block of the one-body operator A(x1) + A(x2).
Eigen::MatrixXd pair_one_body_block(const Eigen::MatrixXd& a,
                                    const PairIndex& idx);

/// Pair-basis block of lambda * delta(x1 - x2).
Eigen::MatrixXd pair_interaction_block(const InteractionTensor& interaction,
                                       double lambda, const PairIndex& idx);

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXd pair_coeffs;

  // Provenance of the solve.
  BasisSpec basis;
  PotentialParams params;
  QuadSpec quad;

  // Basis-refinement gate: |E_0(M) - E_0(M-10)| at fixed omega.
  bool converged = false;
  double convergence_delta = 0.0;
};

/// Lowest eigenpair of a pair-basis Hamiltonian. The matrix is split into
/// the even and odd total-parity sectors (a + b even / odd) when they do not
/// couple, and each sector is solved densely; the eigenvector's
/// largest-magnitude coefficient is made positive.
/// Throws NumericalError when the input is not square, symmetric and finite
/// or the eigensolver fails.
GroundState ground_state(const Eigen::MatrixXd& H, const PairIndex& idx);

}  // namespace dotent
