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

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dotent/hamiltonian.hpp"

namespace dotent {

/// Psi(x1, x2) = sum_nm C_nm phi_n(x1) phi_m(x2); symmetric, unit Frobenius
/// norm. The one-particle reduced density matrix is C C^T.
struct CoeffMatrix {
  Eigen::MatrixXd C;
};

/// Eigenvalues of the reduced density matrix, descending, clamped at 0.
struct OccupationSpectrum {
  std::vector<double> lambdas;

  double trace() const;
};

enum class Normalization { one, two };
enum class ShiftMode { minus_V0, global_min };

std::string_view to_string(Normalization n);
std::string_view to_string(ShiftMode m);
/// Throws ConfigError on an unknown name.
Normalization parse_normalization(std::string_view s);
ShiftMode parse_shift_mode(std::string_view s);

CoeffMatrix coeff_matrix(const Eigen::VectorXd& pair_coeffs,
                         const PairIndex& idx);
CoeffMatrix coeff_matrix(const GroundState& gs, const PairIndex& idx);

/// Squared eigenvalues of the symmetric C (equivalently the squared singular
/// values). Throws NumericalError if the decomposition fails.
OccupationSpectrum occupation_spectrum(const CoeffMatrix& c);

/// L = 1 - sum lambda_i^2.
double linear_entropy(const OccupationSpectrum& spectrum);

/// S = -sum lambda_i ln lambda_i, natural log, 0 ln 0 = 0.
double von_neumann(const OccupationSpectrum& spectrum);

/// n(x) = nu * sum_ab (C C^T)_ab phi_a(x) phi_b(x); nu = 1 or 2.
std::vector<double> density(const CoeffMatrix& c, const BasisSpec& basis,
                            std::span<const double> xs, Normalization norm);

/// S_n = -integral n ln n over the truncated, breakpoint-split domain.
double info_entropy(const CoeffMatrix& c, const BasisSpec& basis,
                    const PotentialParams& params, const QuadSpec& quad,
                    Normalization norm);

/// <A(x1) + A(x2)> for a one-body matrix A: 2 Tr(C A C).
double one_body_expectation(const CoeffMatrix& c, const Eigen::MatrixXd& a);

/// <U> = c^T U_block c with U_block the contact block at strength lambda.
double coulomb_expectation(const GroundState& gs,
                           const InteractionTensor& interaction,
                           const PairIndex& idx, double lambda);

struct ShiftedRatio {
  double value;             // NaN when precision-limited
  double denominator;       // <V> - 2 V_shift
  bool precision_limited;
};

inline constexpr double kDefaultDenomFloor = 1e-9;

/// <U> / (<V> - 2 V_shift), with V_shift = -V0 (minus_V0) or the global
/// minimum of V (global_min).
ShiftedRatio shifted_ratio(double u_exp, double v_exp,
                           const PotentialParams& params, ShiftMode mode,
                           double denom_floor = kDefaultDenomFloor);

}  // namespace dotent
