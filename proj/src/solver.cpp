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

#include "dotent/solver.hpp"

#include <cmath>

namespace dotent {

double ground_energy(const PotentialParams& params, const BasisSpec& basis,
                     const QuadSpec& quad) {
  const Eigen::MatrixXd h =
      kinetic_matrix(basis) + potential_matrix(basis, params, quad);
  const PairIndex idx(basis.M);
  const InteractionTensor tensor(basis);
  return ground_state(assemble_two_body(h, tensor, params.lambda, idx), idx)
      .energy;
}

PointSolution solve_point(const PotentialParams& params,
                          const BasisSpec& basis, const QuadSpec& quad,
                          const SolverOptions& options) {
  const OneBodyParts parts =
      one_body_parts(basis, params, quad, options.coverage_factor);
  const PairIndex idx(basis.M);
  const InteractionTensor tensor(basis);
  const Eigen::MatrixXd H =
      assemble_two_body(parts.total(), tensor, params.lambda, idx);

  PointSolution out;
  out.state = ground_state(H, idx);
  out.state.basis = basis;
  out.state.params = params;
  out.state.quad = quad;

  if (options.basis_gate && basis.M - 10 >= 2) {
    const BasisSpec smaller{basis.M - 10, basis.omega};
    const double coarse = ground_energy(params, smaller, quad);
    out.state.convergence_delta = std::abs(out.state.energy - coarse);
    out.state.converged = out.state.convergence_delta < options.gate_tolerance;
  } else {
    out.state.convergence_delta = std::nan("");
    out.state.converged = false;
  }

  const CoeffMatrix c = coeff_matrix(out.state, idx);
  out.spectrum = occupation_spectrum(c);

  PointObservables& o = out.obs;
  o.E0 = out.state.energy;
  o.L = linear_entropy(out.spectrum);
  o.S = von_neumann(out.spectrum);
  o.Sn = info_entropy(c, basis, params, quad, options.normalization);
  o.U = coulomb_expectation(out.state, tensor, idx, params.lambda);
  o.V = one_body_expectation(c, parts.potential);
  o.T = one_body_expectation(c, parts.kinetic);
  o.ratio = shifted_ratio(o.U, o.V, params, options.shift_mode,
                          options.denom_floor);
  o.converged = out.state.converged;
  o.convergence_delta = out.state.convergence_delta;
  o.trace = out.spectrum.trace();
  o.top_occupation = out.spectrum.lambdas.empty() ? 0.0 : out.spectrum.lambdas[0];
  return out;
}

}  // namespace dotent
