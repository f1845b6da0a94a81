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

#include "dotent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <lapacke.h>

#include "dotent/error.hpp"
#include "dotent/simd/kernels.hpp"

namespace dotent {
namespace {

struct RitzPair {
  double value;
  std::vector<double> vector;
};

RitzPair lowest_ritz(const std::vector<double>& alpha,
                     const std::vector<double>& beta) {
  const auto n = static_cast<lapack_int>(alpha.size());
  std::vector<double> d = alpha;
  std::vector<double> e(beta.begin(), beta.begin() + (n > 0 ? n - 1 : 0));
  e.push_back(0.0);
  std::vector<double> w(n);
  std::vector<double> z(n);
  std::vector<lapack_int> support(2);
  lapack_int found = 0;
  const lapack_int info =
      LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0,
                     0.0, 1, 1, 0.0, &found, w.data(), z.data(), n,
                     support.data());
  if (info != 0 || found != 1) {
    throw NumericalError("tridiagonal eigensolver failed in the grid oracle (info=" +
                         std::to_string(info) + ")");
  }
  return {w[0], z};
}

class GridOperator {
 public:
  GridOperator(const PotentialParams& params, const GridSpec& grid)
      : n_(static_cast<std::size_t>(grid.N)), v_(n_) {
    const double dx = grid.dx();
    for (std::size_t i = 0; i < n_; ++i) v_[i] = v_eval(params, -grid.X + i * dx);
    args_.n = n_;
    args_.v = v_.data();
    args_.diag = 2.0 / (dx * dx);
    args_.offdiag = 0.5 / (dx * dx);
    args_.contact = params.lambda / dx;
  }

  std::size_t size() const { return n_ * n_; }

  void apply(const std::vector<double>& in, std::vector<double>& out) const {
    simd::active_kernels().stencil_apply(args_, in.data(), out.data());
  }

 private:
  std::size_t n_;
  std::vector<double> v_;
  simd::StencilArgs args_;
};

struct LanczosOutcome {
  std::vector<double> vector;
  double value;
  int applications;
};

// One cycle of plain Lanczos from a unit start vector: the first pass builds
// the tridiagonal matrix until the lowest Ritz pair settles, the second pass
// regenerates the Krylov vectors and accumulates the Ritz vector.
LanczosOutcome lanczos_cycle(const GridOperator& op,
                             const std::vector<double>& start,
                             const OracleOptions& options) {
  const auto& k = simd::active_kernels();
  const std::size_t size = op.size();
  std::vector<double> prev(size, 0.0);
  std::vector<double> cur = start;
  std::vector<double> w(size);
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[j] couples step j and j + 1
  int applications = 0;
  constexpr int kCheckEvery = 25;

  RitzPair ritz{0.0, {}};
  for (int j = 0; j < options.max_steps; ++j) {
    op.apply(cur, w);
    ++applications;
    if (j > 0) k.axpy(-beta[j - 1], prev.data(), w.data(), size);
    const double a = k.dot(cur.data(), w.data(), size);
    k.axpy(-a, cur.data(), w.data(), size);
    const double b = std::sqrt(k.dot(w.data(), w.data(), size));
    alpha.push_back(a);
    beta.push_back(b);

    const bool last = j + 1 == options.max_steps || b == 0.0;
    if (last || (j + 1) % kCheckEvery == 0) {
      ritz = lowest_ritz(alpha, beta);
      const double estimate = b * std::abs(ritz.vector.back());
      if (last || estimate < 0.1 * options.tolerance * std::max(1.0, std::abs(ritz.value))) {
        break;
      }
    }
    prev.swap(cur);
    cur.swap(w);
    k.scale(1.0 / b, cur.data(), size);
  }

  // Second pass: identical recurrence, accumulating the Ritz vector.
  const std::size_t steps = alpha.size();
  std::vector<double> x(size, 0.0);
  std::fill(prev.begin(), prev.end(), 0.0);
  cur = start;
  for (std::size_t j = 0; j < steps; ++j) {
    k.axpy(ritz.vector[j], cur.data(), x.data(), size);
    if (j + 1 == steps) break;
    op.apply(cur, w);
    ++applications;
    if (j > 0) k.axpy(-beta[j - 1], prev.data(), w.data(), size);
    k.axpy(-alpha[j], cur.data(), w.data(), size);
    prev.swap(cur);
    cur.swap(w);
    k.scale(1.0 / beta[j], cur.data(), size);
  }
  k.scale(1.0 / std::sqrt(k.dot(x.data(), x.data(), size)), x.data(), size);
  return {std::move(x), ritz.value, applications};
}

}  // namespace

GridSpec default_grid(const PotentialParams& params, int n_points) {
  return {n_points, params.outer_edge() + 3.0};
}

void validate(const GridSpec& grid, const PotentialParams& params) {
  if (grid.N < 64) {
    throw ConfigError("oracle grid needs N >= 64 points per axis, got " +
                      std::to_string(grid.N));
  }
  if (!(grid.X >= params.outer_edge() + 2.0)) {
    std::ostringstream os;
    os << "oracle half-width X = " << grid.X << " must be at least d + R + 2 = "
       << params.outer_edge() + 2.0;
    throw ConfigError(os.str());
  }
}

OracleResult grid_solve(const PotentialParams& params, const GridSpec& grid,
                        const OracleOptions& options) {
  validate(params);
  validate(grid, params);
  const auto n = static_cast<std::size_t>(grid.N);
  if (n * n > options.max_grid_points) {
    std::ostringstream os;
    os << "oracle grid of " << n << "^2 = " << n * n
       << " points exceeds the cap of " << options.max_grid_points
       << "; use a smaller N";
    throw ConfigError(os.str());
  }

  const GridOperator op(params, grid);
  const auto& k = simd::active_kernels();
  const double dx = grid.dx();
  const std::size_t size = op.size();

  // Positive, exchange-symmetric start vector: overlaps the nodeless ground
  // state, and the operator never leaves the symmetric sector.
  std::vector<double> u(size);
  {
    const double width = params.outer_edge();
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = (-grid.X + i * dx) / width;
      g[i] = std::exp(-x * x);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) u[i * n + j] = g[i] * g[j];
    }
    k.scale(1.0 / std::sqrt(k.dot(u.data(), u.data(), size)), u.data(), size);
  }

  OracleResult out;
  out.grid = grid;
  std::vector<double> hu(size);
  for (int cycle = 0; cycle < options.max_cycles; ++cycle) {
    LanczosOutcome step = lanczos_cycle(op, u, options);
    out.iterations += step.applications;
    u = std::move(step.vector);
    op.apply(u, hu);
    ++out.iterations;
    const double energy = k.dot(u.data(), hu.data(), size);
    k.axpy(-energy, u.data(), hu.data(), size);
    out.E0 = energy;
    out.residual = std::sqrt(k.dot(hu.data(), hu.data(), size));
    if (out.residual <= options.tolerance * std::max(1.0, std::abs(energy))) break;
  }
  if (!std::isfinite(out.E0) ||
      out.residual > 1e3 * options.tolerance * std::max(1.0, std::abs(out.E0))) {
    std::ostringstream os;
    os << "grid oracle did not converge: residual " << out.residual
       << " after " << out.iterations << " operator applications";
    throw NumericalError(os.str());
  }

  const Eigen::Map<const Eigen::MatrixXd> psi(u.data(), grid.N, grid.N);
  out.symmetry_error = (psi - psi.transpose()).cwiseAbs().maxCoeff();

  Eigen::BDCSVD<Eigen::MatrixXd> svd(psi);
  const Eigen::VectorXd& sv = svd.singularValues();
  out.occupations.resize(static_cast<std::size_t>(sv.size()));
  double purity = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    const double occ = sv(i) * sv(i);
    out.occupations[static_cast<std::size_t>(i)] = occ;
    purity += occ * occ;
  }
  std::sort(out.occupations.begin(), out.occupations.end(), std::greater<>());
  out.L = 1.0 - purity;

  double diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) diag += u[i * n + i] * u[i * n + i];
  out.U = params.lambda * diag / dx;

  out.xs.resize(n);
  out.density.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.xs[i] = -grid.X + i * dx;
    out.density[i] = k.dot(u.data() + i * n, u.data() + i * n, n) / dx;
  }
  return out;
}

}  // namespace dotent
