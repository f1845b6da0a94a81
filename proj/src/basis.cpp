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

#include "dotent/basis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "dotent/error.hpp"
#include "dotent/simd/kernels.hpp"

namespace dotent {

void validate(const BasisSpec& spec) {
  if (spec.M < 2) {
    throw ConfigError("basis size M must be at least 2, got " +
                      std::to_string(spec.M));
  }
  if (!(spec.omega > 0.0) || !std::isfinite(spec.omega)) {
    std::ostringstream os;
    os << "oscillator frequency omega must be positive and finite, got "
       << spec.omega;
    throw ConfigError(os.str());
  }
}

double turning_point(const BasisSpec& spec) {
  return std::sqrt((2.0 * spec.M - 1.0) / spec.omega);
}

double default_omega(int M, double coverage_factor, double outer_edge) {
  const double reach = coverage_factor * outer_edge;
  return (2.0 * M - 1.0) / (reach * reach);
}

void check_coverage(const BasisSpec& spec, double outer_edge,
                    double coverage_factor) {
  const double xt = turning_point(spec);
  const double needed = coverage_factor * outer_edge;
  // Relative slack so that omega from default_omega always passes.
  if (xt < needed * (1.0 - 1e-12)) {
    std::ostringstream os;
    os.precision(6);
    os << "basis does not cover the potential: turning point x_t = "
          "sqrt((2M-1)/omega) = "
       << xt << " < coverage_factor*(d+R) = " << coverage_factor << "*"
       << outer_edge << " = " << needed << " (M=" << spec.M
       << ", omega=" << spec.omega << ")";
    throw ValidationError(os.str());
  }
}

double ho_eval(int n, double omega, double x) {
  double prev = 0.0;
  double cur = std::pow(omega / std::numbers::pi, 0.25) *
               std::exp(-0.5 * omega * x * x);
  for (int k = 0; k < n; ++k) {
    const double a = std::sqrt(2.0 * omega / (k + 1));
    const double b = std::sqrt(static_cast<double>(k) / (k + 1));
    const double next = (a * x) * cur - b * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Eigen::MatrixXd ho_eval_batch(const BasisSpec& spec,
                              std::span<const double> xs) {
  const auto count = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd table(count, spec.M);
  if (count == 0) return table;

  const double norm = std::pow(spec.omega / std::numbers::pi, 0.25);
  for (Eigen::Index i = 0; i < count; ++i) {
    table(i, 0) = norm * std::exp(-0.5 * spec.omega * xs[i] * xs[i]);
  }

  const auto& k = simd::active_kernels();
  const std::vector<double> zeros(xs.size(), 0.0);
  for (int n = 0; n + 1 < spec.M; ++n) {
    const double a = std::sqrt(2.0 * spec.omega / (n + 1));
    const double b = std::sqrt(static_cast<double>(n) / (n + 1));
    const double* prev = n == 0 ? zeros.data() : table.col(n - 1).data();
    k.recurrence_step(xs.data(), table.col(n).data(), prev, a, b,
                      table.col(n + 1).data(), xs.size());
  }
  return table;
}

Eigen::MatrixXd kinetic_matrix(const BasisSpec& spec) {
  const int M = spec.M;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(M, M);
  for (int n = 0; n < M; ++n) {
    t(n, n) = 0.5 * spec.omega * (n + 0.5);
    if (n + 2 < M) {
      const double off =
          -0.25 * spec.omega * std::sqrt((n + 1.0) * (n + 2.0));
      t(n, n + 2) = off;
      t(n + 2, n) = off;
    }
  }
  return t;
}

}  // namespace dotent
