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

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dotent/basis.hpp"
#include "dotent/error.hpp"
#include "dotent/potential.hpp"
#include "dotent/quadrature.hpp"

using namespace dotent;

namespace {

using big = boost::multiprecision::cpp_bin_float_50;

// Independent oracle: physicists' Hermite polynomials by the unnormalized
// three-term recurrence in 50-digit arithmetic, then the textbook
// normalization (omega/pi)^(1/4) / sqrt(2^n n!) * exp(-y^2/2).
double reference_phi(int n, double omega, double x) {
  const big w = omega;
  const big y = sqrt(w) * big(x);
  big h_prev = 1;
  big h = 2 * y;
  if (n == 0) h = 1;
  for (int k = 1; k < n; ++k) {
    const big next = 2 * y * h - 2 * k * h_prev;
    h_prev = h;
    h = next;
  }
  big norm = 1;
  for (int k = 1; k <= n; ++k) norm *= 2 * k;
  const big pi = boost::multiprecision::default_ops::get_constant_pi<
      big::backend_type>();
  const big value =
      pow(w / big(pi), big(0.25)) / sqrt(norm) * h * exp(-y * y / 2);
  return static_cast<double>(value);
}

// Eighth-order central second derivative.
double second_derivative(int n, double omega, double x, double h) {
  static const double c[] = {-205.0 / 72, 8.0 / 5, -1.0 / 5, 8.0 / 315,
                             -1.0 / 560};
  double s = c[0] * ho_eval(n, omega, x);
  for (int k = 1; k <= 4; ++k) {
    s += c[k] * (ho_eval(n, omega, x + k * h) + ho_eval(n, omega, x - k * h));
  }
  return s / (h * h);
}

}  // namespace

TEST_SUITE("basis") {
  TEST_CASE("ground orbital at the origin") {
    CHECK(ho_eval(0, 1.0, 0.0) ==
          doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));
    CHECK(ho_eval(0, 1.0, 0.0) == doctest::Approx(0.7511255444649425));
  }

  TEST_CASE("odd orbitals vanish at the origin") {
    for (double omega : {0.01, 0.3, 1.0, 7.0}) {
      CHECK(ho_eval(1, omega, 0.0) == 0.0);
      CHECK(ho_eval(9, omega, 0.0) == 0.0);
    }
  }

  TEST_CASE("n = 7 matches the extended-precision oracle to 12 digits") {
    const double ref = reference_phi(7, 0.3, 1.234);
    CHECK(std::abs(ho_eval(7, 0.3, 1.234) - ref) <= 1e-12 * std::abs(ref));
  }

  TEST_CASE("recurrence stability up to n = 120") {
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> log_omega(std::log(0.01),
                                                     std::log(10.0));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> order(0, 120);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const int n = order(rng);
      const double omega = std::exp(log_omega(rng));
      const double xt = std::sqrt((2.0 * n + 1.0) / omega);
      const double x = 2.0 * xt * unit(rng);
      const double ref = reference_phi(n, omega, x);
      const double got = ho_eval(n, omega, x);
      if (std::abs(ref) < 1e-3) {
        CHECK(std::abs(got - ref) <= 1e-12);
      } else {
        CHECK(std::abs(got - ref) <= 1e-9 * std::abs(ref));
      }
      ++checked;
    }
    CHECK(checked == 400);
  }

  TEST_CASE("batch table") {
    const double xs0[] = {0.0};
    const Eigen::MatrixXd t = ho_eval_batch({2, 1.0}, xs0);
    REQUIRE(t.rows() == 1);
    REQUIRE(t.cols() == 2);
    CHECK(t(0, 0) == doctest::Approx(std::pow(std::numbers::pi, -0.25)));
    CHECK(t(0, 1) == 0.0);

    const std::vector<double> xs = {-7.5, -1.0, 0.0, 0.3, 2.25, 11.0};
    const BasisSpec spec{25, 0.37};
    const Eigen::MatrixXd batch = ho_eval_batch(spec, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (int n = 0; n < spec.M; ++n) {
        CHECK(batch(static_cast<Eigen::Index>(i), n) ==
              ho_eval(n, spec.omega, xs[i]));
      }
    }
  }

  TEST_CASE("orthonormality over the truncated domain") {
    for (int M : {20, 30}) {
      const BasisSpec spec{M, 0.1};
      PotentialParams params;
      params.d = 0.0;
      params.R = 1.0;
      const QuadSpec quad;
      const double X = truncation_halfwidth(spec, params, quad);
      const QuadRule rule = composite_rule({}, X, quad);
      const Eigen::MatrixXd phi = ho_eval_batch(spec, rule.nodes);
      const Eigen::Map<const Eigen::VectorXd> w(
          rule.weights.data(), static_cast<Eigen::Index>(rule.size()));
      const Eigen::MatrixXd gram = phi.transpose() * w.asDiagonal() * phi;
      const double err =
          (gram - Eigen::MatrixXd::Identity(M, M)).cwiseAbs().maxCoeff();
      CAPTURE(M);
      CHECK(err < 1e-10);
    }
  }

  TEST_CASE("kinetic matrix: ladder formula") {
    const BasisSpec spec{40, 0.23};
    const Eigen::MatrixXd t = kinetic_matrix(spec);
    for (int m = 0; m < spec.M; ++m) {
      for (int n = 0; n < spec.M; ++n) {
        double expected = 0.0;
        if (m == n) expected = 0.5 * spec.omega * (n + 0.5);
        if (std::abs(m - n) == 2) {
          const int lo = std::min(m, n);
          expected = -0.25 * spec.omega * std::sqrt((lo + 1.0) * (lo + 2.0));
        }
        CHECK(std::abs(t(m, n) - expected) <= 1e-8);
      }
    }
    CHECK(t == t.transpose());
  }

  TEST_CASE("kinetic matrix: finite-difference quadrature oracle") {
    // <m| -1/2 d^2/dx^2 |n> with an eighth-order difference and composite
    // Gauss-Legendre quadrature; nothing shared with the ladder algebra.
    for (double omega : {0.7, 2.0}) {
      const BasisSpec spec{12, omega};
      const Eigen::MatrixXd t = kinetic_matrix(spec);
      const double X = std::sqrt((2.0 * spec.M - 1.0) / omega) +
                       std::sqrt(2.0 * std::log(1e16) / omega);
      QuadSpec q;
      q.panels_per_interval = 64;
      const QuadRule rule = composite_rule({}, X, q);
      const double h = 0.02 / std::sqrt(omega);
      for (int m = 0; m < spec.M; ++m) {
        for (int n = m; n < spec.M; ++n) {
          double s = 0.0;
          for (std::size_t k = 0; k < rule.size(); ++k) {
            const double x = rule.nodes[k];
            s += rule.weights[k] * ho_eval(m, omega, x) * -0.5 *
                 second_derivative(n, omega, x, h);
          }
          CAPTURE(m);
          CAPTURE(n);
          CHECK(std::abs(t(m, n) - s) <= 1e-8);
        }
      }
    }
  }

  TEST_CASE("kinetic matrix examples") {
    CHECK(kinetic_matrix({1, 2.0})(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    const Eigen::MatrixXd t = kinetic_matrix({5, 1.0});
    CHECK(t(0, 1) == 0.0);
    CHECK(t(0, 2) == doctest::Approx(-std::sqrt(2.0) / 4).epsilon(1e-14));
  }

  TEST_CASE("default omega and coverage") {
    const double omega = default_omega(50, 1.2, 38.0);
    CHECK(omega == doctest::Approx(99.0 / (1.2 * 38.0 * 1.2 * 38.0)));
    CHECK(turning_point({50, omega}) == doctest::Approx(1.2 * 38.0));
    CHECK_NOTHROW(check_coverage({50, omega}, 38.0, 1.2));
    try {
      check_coverage({50, 4.0 * omega}, 38.0, 1.2);
      FAIL("coverage failure not reported");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("x_t = sqrt((2M-1)/omega)") !=
            std::string::npos);
      CHECK(e.code() == ExitCode::validation);
    }
    CHECK_THROWS_AS(validate(BasisSpec{0, 1.0}), ConfigError);
    CHECK_THROWS_AS(validate(BasisSpec{10, -1.0}), ConfigError);
  }
}
