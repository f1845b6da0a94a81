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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dotent/error.hpp"
#include "dotent/hamiltonian.hpp"
#include "dotent/oracle.hpp"
#include "dotent/quadrature.hpp"
#include "dotent/solver.hpp"

using namespace dotent;

namespace {

PotentialParams well(double R, double lambda = 1.0) {
  PotentialParams p;
  p.V0 = 10;
  p.d = 8;
  p.R = R;
  p.p = 200;
  p.lambda = lambda;
  return p;
}

BasisSpec default_basis(int M, const PotentialParams& p) {
  return {M, default_omega(M, kDefaultCoverageFactor, p.outer_edge())};
}

// Brute-force panel quadrature of prod phi_i over a wide interval.
double panel_overlap(const BasisSpec& b, std::initializer_list<int> orbitals) {
  QuadSpec q;
  q.panels_per_interval = 40;
  const double X = turning_point(b) + std::sqrt(2 * std::log(1e16) / b.omega);
  return integrate_piecewise(
      [&](double x) {
        double v = 1.0;
        for (int n : orbitals) v *= ho_eval(n, b.omega, x);
        return v;
      },
      {}, X, q);
}

}  // namespace

TEST_SUITE("hamiltonian") {
  TEST_CASE("pair index") {
    const PairIndex idx(5);
    CHECK(idx.size() == 15);
    for (Eigen::Index k = 0; k < idx.size(); ++k) {
      const auto [a, b] = idx.pair(k);
      CHECK(a <= b);
      CHECK(idx.index(a, b) == k);
      CHECK(idx.index(b, a) == k);
    }
  }

  TEST_CASE("one-body matrix") {
    const PotentialParams zero = [] {
      PotentialParams p = well(10);
      p.V0 = 0.0;
      return p;
    }();
    const BasisSpec b = default_basis(20, zero);
    CHECK(one_body_matrix(b, zero, {}, kDefaultCoverageFactor) == kinetic_matrix(b));

    const PotentialParams p = well(7.5);
    const Eigen::MatrixXd h = one_body_matrix(default_basis(30, p), p, {}, 1.2);
    CHECK(h == h.transpose());
    for (int m = 0; m < 30; ++m) {
      for (int n = 0; n < 30; ++n) {
        if ((m + n) % 2 == 1) CHECK(std::abs(h(m, n)) <= 1e-12);
      }
    }
  }

  TEST_CASE("h00 against a real-space grid expectation") {
    const PotentialParams p = well(10);
    const BasisSpec b = default_basis(40, p);
    const Eigen::MatrixXd h = one_body_matrix(b, p, {}, 1.2);
    // <phi_0| -1/2 d^2/dx^2 + V |phi_0> on a uniform grid with the 3-point
    // Laplacian, dx = 5e-4.
    const double X = 40.0;
    const int n = 160001;
    const double dx = 2 * X / (n - 1);
    double s = 0.0;
    double prev = ho_eval(0, b.omega, -X - dx);
    double cur = ho_eval(0, b.omega, -X);
    for (int i = 0; i < n; ++i) {
      const double x = -X + i * dx;
      const double next = ho_eval(0, b.omega, x + dx);
      const double lap = (next - 2 * cur + prev) / (dx * dx);
      s += cur * (-0.5 * lap + v_eval(p, x) * cur) * dx;
      prev = cur;
      cur = next;
    }
    CHECK(std::abs(h(0, 0) - s) <= 1e-6 * std::abs(s));
  }

  TEST_CASE("quadrature refinement leaves the potential matrix unchanged") {
    const PotentialParams p = well(8.5);
    CHECK(potential_refinement_change(default_basis(40, p), p, {}) < 1e-9);
  }

  TEST_CASE("contact tensor") {
    for (double omega : {0.05, 0.2, 1.0, 3.0}) {
      const InteractionTensor t({6, omega});
      CHECK(std::abs(t(0, 0, 0, 0) - std::sqrt(omega / (2 * std::numbers::pi))) <
            1e-13);
    }
    const InteractionTensor t({12, 0.3});
    CHECK(t.stored() == 1365);  // C(15, 4)
    for (int a = 0; a < 12; ++a) {
      for (int b = 0; b < 12; ++b) {
        for (int c = 0; c < 12; ++c) {
          for (int d = 0; d < 12; ++d) {
            if ((a + b + c + d) % 2 == 1) CHECK(std::abs(t(a, b, c, d)) < 1e-14);
            CHECK(t(a, b, c, d) == t(b, d, a, c));
          }
        }
      }
    }
    const BasisSpec b{4, 0.2};
    const InteractionTensor small(b);
    CHECK(std::abs(small(0, 0, 1, 1) - panel_overlap(b, {0, 0, 1, 1})) < 1e-12);
    CHECK(std::abs(small(0, 1, 2, 3) - panel_overlap(b, {0, 1, 2, 3})) < 1e-12);
  }

  TEST_CASE("pair-basis elements") {
    const int M = 3;
    const BasisSpec b{M, 0.6};
    const PairIndex idx(M);
    Eigen::MatrixXd h(M, M);
    h << 1.0, 0.2, -0.3, 0.2, 2.0, 0.5, -0.3, 0.5, 3.5;
    const Eigen::MatrixXd one = pair_one_body_block(h, idx);
    for (int a = 0; a < M; ++a) {
      CHECK(one(idx.index(a, a), idx.index(a, a)) == doctest::Approx(2 * h(a, a)));
      for (int c = a + 1; c < M; ++c) {
        CHECK(one(idx.index(a, c), idx.index(a, c)) ==
              doctest::Approx(h(a, a) + h(c, c)));
      }
    }

    // Contact elements against direct quadrature of the symmetrized
    // two-particle functions on the collapsed diagonal x1 = x2.
    const InteractionTensor tensor(b);
    const Eigen::MatrixXd u = pair_interaction_block(tensor, 1.0, idx);
    QuadSpec q;
    q.panels_per_interval = 40;
    const double X = 25.0;
    auto sym = [&](int a, int c, double x1, double x2) {
      const double s = ho_eval(a, b.omega, x1) * ho_eval(c, b.omega, x2) +
                       ho_eval(c, b.omega, x1) * ho_eval(a, b.omega, x2);
      return a == c ? 0.5 * s : s / std::sqrt(2.0);
    };
    for (Eigen::Index k = 0; k < idx.size(); ++k) {
      for (Eigen::Index l = 0; l < idx.size(); ++l) {
        const auto [a, bb] = idx.pair(k);
        const auto [c, d] = idx.pair(l);
        const double ref = integrate_piecewise(
            [&](double x) { return sym(a, bb, x, x) * sym(c, d, x, x); }, {}, X, q);
        CHECK(std::abs(u(k, l) - ref) < 1e-12);
      }
    }
    CHECK(u(idx.index(0, 0), idx.index(2, 2)) == doctest::Approx(tensor(0, 0, 2, 2)));
  }

  TEST_CASE("free oscillator limit") {
    // Without the wells (V0 = 0) nothing confines the particles, so the
    // oscillator limit is built explicitly: kinetic matrix plus the matrix of
    // omega^2 x^2 / 2 by quadrature, which together must be diagonal with
    // entries omega (n + 1/2). Two non-interacting particles then occupy the
    // (0,0) pair with E_0 = omega.
    const BasisSpec b{10, 0.8};
    const double X = 12.0;
    Eigen::MatrixXd h = kinetic_matrix(b);
    for (int m = 0; m < b.M; ++m) {
      for (int n = 0; n < b.M; ++n) {
        h(m, n) += integrate_piecewise(
            [&](double x) {
              return ho_eval(m, b.omega, x) * 0.5 * b.omega * b.omega * x * x *
                     ho_eval(n, b.omega, x);
            },
            {}, X, {});
      }
    }
    h = 0.5 * (h + h.transpose()).eval();
    for (int n = 0; n < b.M; ++n) CHECK(h(n, n) == doctest::Approx(b.omega * (n + 0.5)).epsilon(1e-12));
    CHECK((h - Eigen::MatrixXd(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-12);

    const PairIndex idx(b.M);
    const InteractionTensor t(b);
    const GroundState gs = ground_state(assemble_two_body(h, t, 0.0, idx), idx);
    CHECK(gs.energy == doctest::Approx(b.omega).epsilon(1e-12));
    CHECK(std::abs(gs.pair_coeffs(idx.index(0, 0))) == doctest::Approx(1.0).epsilon(1e-12));

    // And with V0 = 0 the one-body matrix of the model is the kinetic matrix.
    PotentialParams free = well(1, 0.0);
    free.V0 = 0.0;
    free.d = 0.0;
    CHECK((one_body_matrix(b, free, {}, 1.2) - kinetic_matrix(b)).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("diagonal Hamiltonian") {
    const PairIndex idx(4);
    Eigen::VectorXd diag(idx.size());
    for (Eigen::Index k = 0; k < idx.size(); ++k) diag(k) = 3.0 + 0.5 * static_cast<double>((k * 7) % 10);
    diag(6) = -1.25;
    const Eigen::MatrixXd H = diag.asDiagonal();
    const GroundState gs = ground_state(H, idx);
    CHECK(gs.energy == -1.25);
    CHECK(gs.pair_coeffs(6) == doctest::Approx(1.0));
    CHECK(gs.pair_coeffs.norm() == doctest::Approx(1.0));
  }

  TEST_CASE("malformed Hamiltonians are rejected") {
    const PairIndex idx(3);
    Eigen::MatrixXd H = Eigen::MatrixXd::Identity(6, 6);
    H(0, 1) = 1e-3;
    CHECK_THROWS_AS(ground_state(H, idx), NumericalError);
    H = Eigen::MatrixXd::Identity(5, 5);
    CHECK_THROWS_AS(ground_state(H, idx), NumericalError);
    H = Eigen::MatrixXd::Identity(6, 6);
    H(2, 2) = std::nan("");
    CHECK_THROWS_AS(ground_state(H, idx), NumericalError);
  }

  TEST_CASE("variational monotonicity in M") {
    const PotentialParams p = well(8.5);
    const double omega = default_omega(30, 1.2, p.outer_edge());
    double prev = std::numeric_limits<double>::infinity();
    for (int M = 30; M <= 60; M += 10) {
      const double e = ground_energy(p, {M, omega}, {});
      CHECK(e <= prev + 1e-12);
      prev = e;
    }
  }

  TEST_CASE("double-well energy agrees with the grid oracle") {
    const PotentialParams p = well(5);
    const BasisSpec b = default_basis(50, p);
    const double basis_e = ground_energy(p, b, {});
    const OracleResult grid = grid_solve(p, default_grid(p, 400));
    CAPTURE(basis_e);
    CAPTURE(grid.E0);
    CHECK(std::abs(basis_e - grid.E0) <= 1e-3 * std::abs(grid.E0));
  }
}
