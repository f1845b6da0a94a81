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

#include "dotent/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <lapacke.h>

#include "dotent/error.hpp"
#include "dotent/simd/kernels.hpp"

namespace dotent {
namespace {

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct Eigenpair {
  double value;
  Eigen::VectorXd vector;
};

// Lowest eigenpair of a dense symmetric matrix: Householder reduction to
// tridiagonal form, MRRR for the single lowest tridiagonal eigenpair, then
// the one eigenvector is carried back through the reflectors. Only one
// vector is back-transformed, so no matrix-matrix products are involved.
// The residual |A z - e z| is always checked against the matrix scale.
Eigenpair lowest_eigenpair(const Eigen::MatrixXd& a) {
  const auto n = static_cast<lapack_int>(a.rows());
  Eigen::MatrixXd work = a;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max<lapack_int>(n, 1));
  Eigen::VectorXd tau(std::max<lapack_int>(n, 1));
  lapack_int info = LAPACKE_dsytrd(LAPACK_COL_MAJOR, 'L', n, work.data(), n,
                                   diag.data(), off.data(), tau.data());
  Eigen::VectorXd w(n);
  Eigen::VectorXd z(n);
  std::vector<lapack_int> support(2);
  lapack_int found = 0;
  if (info == 0) {
    info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(),
                          off.data(), 0.0, 0.0, 1, 1, 0.0, &found, w.data(),
                          z.data(), n, support.data());
  }
  if (info != 0 || found != 1 || !std::isfinite(w(0))) {
    std::ostringstream os;
    os << "dense symmetric eigensolver failed (info=" << info
       << ", eigenvalues found=" << found << ") on a " << n << "x" << n
       << " matrix with Frobenius norm " << a.norm();
    throw NumericalError(os.str());
  }

  // Q = H(0) H(1) ... H(n-2); reflector i has v(i+1) = 1 and v(i+2:) stored
  // below the subdiagonal of column i.
  const simd::KernelTable& k = simd::active_kernels();
  for (lapack_int i = n - 2; i >= 0; --i) {
    const double* v = work.data() + static_cast<std::size_t>(i) * n + i + 2;
    const auto tail = static_cast<std::size_t>(n - i - 2);
    const double s = tau(i) * (z(i + 1) + k.dot(v, z.data() + i + 2, tail));
    z(i + 1) -= s;
    k.axpy(-s, v, z.data() + i + 2, tail);
  }

  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff()) * n;
  const double residual = (a * z - w(0) * z).norm();
  if (!(residual <= 1e-12 * scale)) {
    std::ostringstream os;
    os << "dense symmetric eigensolver returned an inaccurate eigenpair: "
       << "residual " << residual << " for eigenvalue " << w(0) << " on a "
       << n << "x" << n << " matrix (allowed " << 1e-12 * scale << ")";
    throw NumericalError(os.str());
  }
  return {w(0), z};
}

void require_square(const Eigen::MatrixXd& m, Eigen::Index n,
                    const char* what) {
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << what << " has shape " << m.rows() << "x" << m.cols()
       << ", expected " << n << "x" << n;
    throw NumericalError(os.str());
  }
}

}  // namespace

PairIndex::PairIndex(int M) : M_(M) {
  if (M < 1) throw ConfigError("pair index needs at least one orbital");
  offsets_.resize(M);
  pairs_.reserve(static_cast<std::size_t>(M) * (M + 1) / 2);
  for (int a = 0; a < M; ++a) {
    offsets_[a] = static_cast<Eigen::Index>(pairs_.size());
    for (int b = a; b < M; ++b) pairs_.emplace_back(a, b);
  }
}

Eigen::MatrixXd potential_matrix(const BasisSpec& basis,
                                 const PotentialParams& params,
                                 const QuadSpec& quad) {
  const double X = truncation_halfwidth(basis, params, quad);
  const std::vector<double> breaks = breakpoints(params);
  const QuadRule rule = composite_rule(breaks, X, quad);

  const Eigen::MatrixXd phi = ho_eval_batch(basis, rule.nodes);
  Eigen::VectorXd wv(static_cast<Eigen::Index>(rule.size()));
  for (std::size_t q = 0; q < rule.size(); ++q) {
    wv(static_cast<Eigen::Index>(q)) =
        rule.weights[q] * v_eval(params, rule.nodes[q]);
  }
  Eigen::MatrixXd weighted = phi;
  weighted.array().colwise() *= wv.array();
  const Eigen::MatrixXd raw = phi.transpose() * weighted;

  const int M = basis.M;
  Eigen::MatrixXd v(M, M);
  for (int m = 0; m < M; ++m) {
    for (int n = m; n < M; ++n) {
      // V is even: odd-parity couplings vanish identically.
      const double value = (m + n) % 2 == 0 ? raw(m, n) : 0.0;
      if (!std::isfinite(value)) {
        throw NumericalError("non-finite potential matrix element <" +
                             std::to_string(m) + "|V|" + std::to_string(n) +
                             ">");
      }
      v(m, n) = value;
      v(n, m) = value;
    }
  }
  return v;
}

OneBodyParts one_body_parts(const BasisSpec& basis,
                            const PotentialParams& params,
                            const QuadSpec& quad, double coverage_factor) {
  validate(basis);
  validate(params);
  validate(quad);
  check_coverage(basis, params.outer_edge(), coverage_factor);
  return {kinetic_matrix(basis), potential_matrix(basis, params, quad)};
}

Eigen::MatrixXd one_body_matrix(const BasisSpec& basis,
                                const PotentialParams& params,
                                const QuadSpec& quad, double coverage_factor) {
  return one_body_parts(basis, params, quad, coverage_factor).total();
}

double potential_refinement_change(const BasisSpec& basis,
                                   const PotentialParams& params,
                                   const QuadSpec& quad) {
  QuadSpec fine = quad;
  fine.panels_per_interval *= 2;
  const Eigen::MatrixXd coarse_v = potential_matrix(basis, params, quad);
  const Eigen::MatrixXd fine_v = potential_matrix(basis, params, fine);
  const double scale = fine_v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (fine_v - coarse_v).cwiseAbs().maxCoeff() / scale;
}

std::size_t InteractionTensor::key(int a, int b, int c, int d) {
  // Sort the four indices, then rank the multiset.
  int s[4] = {a, b, c, d};
  std::sort(s, s + 4);
  return static_cast<std::size_t>(s[0]) + choose(s[1] + 1, 2) +
         choose(s[2] + 2, 3) + choose(s[3] + 3, 4);
}

InteractionTensor::InteractionTensor(const BasisSpec& basis) : M_(basis.M) {
  validate(basis);
  const int M = basis.M;
  values_.assign(choose(M + 3, 4), 0.0);

  // phi_a phi_b phi_c phi_d is a polynomial of degree a+b+c+d <= 4(M-1)
  // times exp(-2 omega x^2); one rule sized for the largest degree is exact
  // for every entry.
  const QuadRule rule = gaussian_rule(4 * (M - 1), 2.0 * basis.omega);
  const Eigen::MatrixXd phi = ho_eval_batch(basis, rule.nodes);
  const auto K = static_cast<Eigen::Index>(rule.size());
  const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), K);

  const PairIndex pairs(M);
  Eigen::MatrixXd products(K, pairs.size());
  for (Eigen::Index k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs.pair(k);
    products.col(k) = phi.col(a).cwiseProduct(phi.col(b));
  }

  const auto& kern = simd::active_kernels();
  Eigen::VectorXd weighted(K);
  for (int a = 0; a < M; ++a) {
    for (int b = a; b < M; ++b) {
      weighted = products.col(pairs.index(a, b)).cwiseProduct(w);
      for (int c = b; c < M; ++c) {
        for (int d = c + (a + b) % 2; d < M; d += 2) {
          values_[key(a, b, c, d)] =
              kern.dot(weighted.data(), products.col(pairs.index(c, d)).data(),
                       static_cast<std::size_t>(K));
        }
      }
    }
  }
}

double InteractionTensor::operator()(int a, int b, int c, int d) const {
  return values_[key(a, b, c, d)];
}

Eigen::MatrixXd pair_one_body_block(const Eigen::MatrixXd& h,
                                    const PairIndex& idx) {
  const int M = idx.orbitals();
  require_square(h, M, "one-body matrix");
  const Eigen::Index D = idx.size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(D, D);
  for (Eigen::Index k = 0; k < D; ++k) {
    const auto [a, b] = idx.pair(k);
    for (Eigen::Index l = k; l < D; ++l) {
      const auto [c, d] = idx.pair(l);
      double sum = 0.0;
      if (b == d) sum += h(a, c);
      if (a == c) sum += h(b, d);
      if (b == c) sum += h(a, d);
      if (a == d) sum += h(b, c);
      if (sum == 0.0) continue;
      const double norm =
          1.0 / std::sqrt((a == b ? 2.0 : 1.0) * (c == d ? 2.0 : 1.0));
      out(k, l) = norm * sum;
      out(l, k) = out(k, l);
    }
  }
  return out;
}

Eigen::MatrixXd pair_interaction_block(const InteractionTensor& interaction,
                                       double lambda, const PairIndex& idx) {
  if (interaction.orbitals() != idx.orbitals()) {
    throw NumericalError("interaction tensor and pair index disagree on M");
  }
  const Eigen::Index D = idx.size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(D, D);
  if (lambda == 0.0) return out;
  for (Eigen::Index k = 0; k < D; ++k) {
    const auto [a, b] = idx.pair(k);
    for (Eigen::Index l = k; l < D; ++l) {
      const auto [c, d] = idx.pair(l);
      if ((a + b + c + d) % 2 != 0) continue;
      const double norm =
          2.0 / std::sqrt((a == b ? 2.0 : 1.0) * (c == d ? 2.0 : 1.0));
      out(k, l) = lambda * norm * interaction(a, b, c, d);
      out(l, k) = out(k, l);
    }
  }
  return out;
}

Eigen::MatrixXd assemble_two_body(const Eigen::MatrixXd& h,
                                  const InteractionTensor& interaction,
                                  double lambda, const PairIndex& idx) {
  Eigen::MatrixXd H = pair_one_body_block(h, idx);
  if (lambda == 0.0) return H;
  if (interaction.orbitals() != idx.orbitals()) {
    throw NumericalError("interaction tensor and pair index disagree on M");
  }
  const Eigen::Index D = idx.size();
  for (Eigen::Index k = 0; k < D; ++k) {
    const auto [a, b] = idx.pair(k);
    for (Eigen::Index l = k; l < D; ++l) {
      const auto [c, d] = idx.pair(l);
      if ((a + b + c + d) % 2 != 0) continue;
      const double norm =
          2.0 / std::sqrt((a == b ? 2.0 : 1.0) * (c == d ? 2.0 : 1.0));
      H(k, l) += lambda * norm * interaction(a, b, c, d);
      H(l, k) = H(k, l);
    }
  }
  return H;
}

GroundState ground_state(const Eigen::MatrixXd& H, const PairIndex& idx) {
  const Eigen::Index D = idx.size();
  require_square(H, D, "pair-basis Hamiltonian");
  if (!H.allFinite()) {
    throw NumericalError("pair-basis Hamiltonian has non-finite entries");
  }
  if (H != H.transpose()) {
    throw NumericalError("pair-basis Hamiltonian is not exactly symmetric");
  }

  std::vector<Eigen::Index> sectors[2];
  for (Eigen::Index k = 0; k < D; ++k) {
    const auto [a, b] = idx.pair(k);
    sectors[(a + b) % 2].push_back(k);
  }
  bool decoupled = true;
  for (Eigen::Index i : sectors[0]) {
    for (Eigen::Index j : sectors[1]) {
      if (H(i, j) != 0.0) {
        decoupled = false;
        break;
      }
    }
    if (!decoupled) break;
  }

  GroundState gs;
  gs.pair_coeffs = Eigen::VectorXd::Zero(D);
  if (decoupled) {
    bool have = false;
    for (const auto& sector : sectors) {
      if (sector.empty()) continue;
      const auto n = static_cast<Eigen::Index>(sector.size());
      Eigen::MatrixXd block(n, n);
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) block(i, j) = H(sector[i], sector[j]);
      }
      Eigenpair ep = lowest_eigenpair(block);
      if (!have || ep.value < gs.energy) {
        have = true;
        gs.energy = ep.value;
        gs.pair_coeffs.setZero();
        for (Eigen::Index i = 0; i < n; ++i) gs.pair_coeffs(sector[i]) = ep.vector(i);
      }
    }
  } else {
    Eigenpair ep = lowest_eigenpair(H);
    gs.energy = ep.value;
    gs.pair_coeffs = ep.vector;
  }

  gs.pair_coeffs.normalize();
  Eigen::Index largest = 0;
  gs.pair_coeffs.cwiseAbs().maxCoeff(&largest);
  if (gs.pair_coeffs(largest) < 0.0) gs.pair_coeffs = -gs.pair_coeffs;
  return gs;
}

}  // namespace dotent
