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

#include <cstddef>
#include <string>
#include <vector>

#include "dotent/potential.hpp"

namespace dotent {

/// Uniform grid of N points per axis on [-X, X], spacing dx = 2X / (N - 1).
struct GridSpec {
  int N = 400;
  double X = 0.0;

  double dx() const { return 2.0 * X / (N - 1); }
};

/// N = n_points and X = d + R + 3.
GridSpec default_grid(const PotentialParams& params, int n_points = 400);

/// Throws ConfigError unless N >= 64 and X >= d + R + 2.
void validate(const GridSpec& grid, const PotentialParams& params);

struct OracleOptions {
  std::size_t max_grid_points = 4'000'000;  // cap on N^2
  double tolerance = 1e-9;   // residual |H u - E u| relative to max(1, |E|)
  int max_steps = 6000;      // Lanczos steps per cycle
  int max_cycles = 12;
};

/// Real-space reference result. The wave-function matrix psi_ij satisfies
/// sum psi_ij^2 dx^2 = 1.
struct OracleResult {
  GridSpec grid;
  std::string stencil = "3-point";
  double E0 = 0.0;
  double L = 0.0;
  double U = 0.0;
  std::vector<double> occupations;  // descending
  std::vector<double> xs;
  std::vector<double> density;      // integrates to 1
  int iterations = 0;               // total operator applications
  double residual = 0.0;
  double symmetry_error = 0.0;      // max |psi_ij - psi_ji|
};

/// Brute-force ground state of the two-electron problem on the N x N grid:
/// 3-point kinetic stencil, V(x_i) + V(x_j) on the diagonal, lambda/dx at
/// x_i = x_j. The iteration stays in the exchange-symmetric sector.
OracleResult grid_solve(const PotentialParams& params, const GridSpec& grid,
                        const OracleOptions& options = {});

}  // namespace dotent
