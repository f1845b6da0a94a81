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

#include <Eigen/Dense>

namespace dotent {

inline constexpr double kDefaultCoverageFactor = 1.2;

/// Single-particle harmonic-oscillator basis: orbitals n = 0..M-1 of an
/// oscillator with frequency omega (effective atomic units).
struct BasisSpec {
  int M = 50;
  double omega = 1.0;

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

/// Throws ConfigError unless M >= 2 and omega > 0.
void validate(const BasisSpec& spec);

/// Classical turning point of the highest orbital, sqrt((2M-1)/omega).
double turning_point(const BasisSpec& spec);

/// Frequency that places the highest turning point exactly at
/// coverage_factor * outer_edge.
double default_omega(int M, double coverage_factor, double outer_edge);

/// Throws ValidationError when the highest turning point falls short of
/// coverage_factor * outer_edge. The potential's outer edge is d + R.
void check_coverage(const BasisSpec& spec, double outer_edge,
                    double coverage_factor);

/// Normalized oscillator eigenfunction phi_n(x), evaluated by the normalized
/// three-term recurrence so that nothing overflows for large n.
double ho_eval(int n, double omega, double x);

/// Table with one row per position and one column per orbital; column n
/// equals ho_eval(n, omega, .) bit for bit. One recurrence pass over all x.
Eigen::MatrixXd ho_eval_batch(const BasisSpec& spec,
                              std::span<const double> xs);

/// <m| -1/2 d^2/dx^2 |n>, pentadiagonal (only |m-n| in {0, 2}).
Eigen::MatrixXd kinetic_matrix(const BasisSpec& spec);

}  // namespace dotent
