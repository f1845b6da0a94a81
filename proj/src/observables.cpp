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

#include "dotent/observables.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "dotent/error.hpp"

namespace dotent {

double OccupationSpectrum::trace() const {
  return std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
}

std::string_view to_string(Normalization n) {
  return n == Normalization::one ? "one" : "two";
}

std::string_view to_string(ShiftMode m) {
  return m == ShiftMode::minus_V0 ? "minus_V0" : "global_min";
}

Normalization parse_normalization(std::string_view s) {
  if (s == "one" || s == "1") return Normalization::one;
  if (s == "two" || s == "2") return Normalization::two;
  throw ConfigError("normalization must be 'one' or 'two', got '" +
                    std::string(s) + "'");
}

ShiftMode parse_shift_mode(std::string_view s) {
  if (s == "minus_V0") return ShiftMode::minus_V0;
  if (s == "global_min") return ShiftMode::global_min;
  throw ConfigError("shift_mode must be 'minus_V0' or 'global_min', got '" +
                    std::string(s) + "'");
}

CoeffMatrix coeff_matrix(const Eigen::VectorXd& pair_coeffs,
                         const PairIndex& idx) {
  if (pair_coeffs.size() != idx.size()) {
    throw NumericalError("pair coefficient vector has the wrong length");
  }
  const int M = idx.orbitals();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CoeffMatrix out{Eigen::MatrixXd::Zero(M, M)};
  for (Eigen::Index k = 0; k < idx.size(); ++k) {
    const auto [a, b] = idx.pair(k);
    if (a == b) {
      out.C(a, a) = pair_coeffs(k);
    } else {
      out.C(a, b) = pair_coeffs(k) * inv_sqrt2;
      out.C(b, a) = out.C(a, b);
    }
  }
  return out;
}

CoeffMatrix coeff_matrix(const GroundState& gs, const PairIndex& idx) {
  return coeff_matrix(gs.pair_coeffs, idx);
}

OccupationSpectrum occupation_spectrum(const CoeffMatrix& c) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c.C,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition of the coefficient matrix failed");
  }
  OccupationSpectrum out;
  out.lambdas.reserve(static_cast<std::size_t>(c.C.rows()));
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double e = es.eigenvalues()(i);
    out.lambdas.push_back(std::max(e * e, 0.0));
  }
  std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<>());
  return out;
}

double linear_entropy(const OccupationSpectrum& spectrum) {
  double purity = 0.0;
  for (double l : spectrum.lambdas) purity += l * l;
  return 1.0 - purity;
}

double von_neumann(const OccupationSpectrum& spectrum) {
  double s = 0.0;
  for (double l : spectrum.lambdas) {
    if (l > 0.0) s -= l * std::log(l);
  }
  return s;
}

namespace {

Eigen::VectorXd density_at(const CoeffMatrix& c, const BasisSpec& basis,
                           std::span<const double> xs, Normalization norm) {
  const Eigen::MatrixXd phi = ho_eval_batch(basis, xs);
  // C symmetric: phi^T C C^T phi = |C phi|^2.
  const Eigen::MatrixXd projected = phi * c.C;
  const double nu = norm == Normalization::two ? 2.0 : 1.0;
  return nu * projected.rowwise().squaredNorm();
}

}  // namespace

std::vector<double> density(const CoeffMatrix& c, const BasisSpec& basis,
                            std::span<const double> xs, Normalization norm) {
  const Eigen::VectorXd n = density_at(c, basis, xs, norm);
  return {n.data(), n.data() + n.size()};
}

double info_entropy(const CoeffMatrix& c, const BasisSpec& basis,
                    const PotentialParams& params, const QuadSpec& quad,
                    Normalization norm) {
  const double X = truncation_halfwidth(basis, params, quad);
  const std::vector<double> breaks = breakpoints(params);
  const QuadRule rule = composite_rule(breaks, X, quad);
  const Eigen::VectorXd n = density_at(c, basis, rule.nodes, norm);
  double s = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double value = n(static_cast<Eigen::Index>(q));
    if (!std::isfinite(value)) {
      throw NumericalError("non-finite density at x = " +
                           std::to_string(rule.nodes[q]));
    }
    if (value < 1e-300) continue;
    s -= rule.weights[q] * value * std::log(value);
  }
  return s;
}

double one_body_expectation(const CoeffMatrix& c, const Eigen::MatrixXd& a) {
  return 2.0 * (c.C * a * c.C).trace();
}

double coulomb_expectation(const GroundState& gs,
                           const InteractionTensor& interaction,
                           const PairIndex& idx, double lambda) {
  if (lambda == 0.0) return 0.0;
  const Eigen::VectorXd& v = gs.pair_coeffs;
  const Eigen::Index D = idx.size();
  double sum = 0.0;
  for (Eigen::Index k = 0; k < D; ++k) {
    if (v(k) == 0.0) continue;
    const auto [a, b] = idx.pair(k);
    double row = 0.0;
    for (Eigen::Index l = 0; l < D; ++l) {
      const auto [c, d] = idx.pair(l);
      if ((a + b + c + d) % 2 != 0 || v(l) == 0.0) continue;
      const double norm =
          2.0 / std::sqrt((a == b ? 2.0 : 1.0) * (c == d ? 2.0 : 1.0));
      row += norm * interaction(a, b, c, d) * v(l);
    }
    sum += v(k) * row;
  }
  return lambda * sum;
}

ShiftedRatio shifted_ratio(double u_exp, double v_exp,
                           const PotentialParams& params, ShiftMode mode,
                           double denom_floor) {
  const double shift =
      mode == ShiftMode::minus_V0 ? -params.V0 : v_min(params).v;
  const double denom = v_exp - 2.0 * shift;
  if (!(std::abs(denom) >= denom_floor)) {
    return {std::numeric_limits<double>::quiet_NaN(), denom, true};
  }
  return {u_exp / denom, denom, false};
}

}  // namespace dotent
