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

#include "dotent/hamiltonian.hpp"
#include "dotent/observables.hpp"

namespace dotent {

struct SolverOptions {
  double coverage_factor = kDefaultCoverageFactor;
  bool basis_gate = true;        // re-solve at M - 10 to flag convergence
  double gate_tolerance = 1e-5;  // effective Hartree
  Normalization normalization = Normalization::one;
  ShiftMode shift_mode = ShiftMode::global_min;
  double denom_floor = kDefaultDenomFloor;

  friend bool operator==(const SolverOptions&, const SolverOptions&) = default;
};

/// Every observable derived from one ground state.
struct PointObservables {
  double E0 = 0.0;
  double L = 0.0;
  double S = 0.0;
  double Sn = 0.0;
  double U = 0.0;
  double V = 0.0;
  double T = 0.0;
  ShiftedRatio ratio{};
  bool converged = false;
  double convergence_delta = 0.0;
  double trace = 0.0;           // sum of occupations
  double top_occupation = 0.0;  // largest occupation
};

struct PointSolution {
  GroundState state;
  OccupationSpectrum spectrum;
  PointObservables obs;
};

/// Full pipeline for one geometry: one-body matrix, contact tensor, pair
/// Hamiltonian, ground state and observables.
PointSolution solve_point(const PotentialParams& params,
                          const BasisSpec& basis, const QuadSpec& quad,
                          const SolverOptions& options);

/// Ground-state energy only; no coverage check. Used by the basis gate and
/// by convergence studies.
double ground_energy(const PotentialParams& params, const BasisSpec& basis,
                     const QuadSpec& quad);

}  // namespace dotent
