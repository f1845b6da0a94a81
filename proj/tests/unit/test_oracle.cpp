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
#include "dotent/oracle.hpp"

using namespace dotent;

TEST_SUITE("oracle") {
  TEST_CASE("deep square well matches the box spectrum") {
    PotentialParams p;
    p.V0 = 50;
    p.d = 0;
    p.R = 2;
    p.p = 200;
    p.lambda = 0;
    const OracleResult r = grid_solve(p, default_grid(p, 400));
    // With d = 0 both terms sit at the origin: one particle sees depth 2 V0.
    const double box = 2 * (std::numbers::pi * std::numbers::pi /
                            (2 * (2 * p.R) * (2 * p.R)) - 2 * p.V0);
    CAPTURE(r.E0);
    CHECK(std::abs(r.E0 - box) <= 0.02 * std::abs(box));
    CHECK(r.L < 1e-6);
    CHECK(r.U == 0.0);
  }

  TEST_CASE("product state without interaction") {
    PotentialParams p;
    p.R = 5;
    p.lambda = 0;
    const OracleResult r = grid_solve(p, default_grid(p, 200));
    CHECK(r.L < 1e-6);
    CHECK(r.occupations[0] > 1 - 1e-6);
  }

  TEST_CASE("second-order convergence in the grid step") {
    // Smooth wells so the 3-point scheme shows its nominal order.
    PotentialParams p;
    p.V0 = 10;
    p.d = 2;
    p.R = 2;
    p.p = 2;
    p.lambda = 0;
    const double X = 12.0;
    double e[3];
    int k = 0;
    for (int N : {101, 201, 401}) e[k++] = grid_solve(p, {N, X}).E0;
    const double ratio = (e[0] - e[1]) / (e[1] - e[2]);
    CAPTURE(ratio);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
  }

  TEST_CASE("exchange symmetry, normalization, convergence") {
    PotentialParams p;
    p.R = 8.5;
    const OracleResult r = grid_solve(p, default_grid(p, 300));
    CHECK(r.symmetry_error == 0.0);
    CHECK(r.residual <= 1e-9 * std::max(1.0, std::abs(r.E0)));
    double occ = 0.0;
    for (double l : r.occupations) occ += l;
    CHECK(std::abs(occ - 1.0) < 1e-10);
    double total = 0.0;
    for (double n : r.density) total += n * r.grid.dx();
    CHECK(std::abs(total - 1.0) < 1e-10);
    for (std::size_t i = 0; i < r.density.size(); ++i) {
      CHECK(r.density[i] == doctest::Approx(r.density[r.density.size() - 1 - i]).epsilon(1e-8));
    }
  }

  TEST_CASE("grid validation") {
    PotentialParams p;
    CHECK_THROWS_AS(grid_solve(p, {32, 30.0}), ConfigError);
    CHECK_THROWS_AS(grid_solve(p, {400, 5.0}), ConfigError);
    OracleOptions tiny;
    tiny.max_grid_points = 1000;
    CHECK_THROWS_AS(grid_solve(p, default_grid(p, 400), tiny), ConfigError);
  }
}
