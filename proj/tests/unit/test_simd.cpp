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
#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "dotent/simd/kernels.hpp"
#include "dotent/solver.hpp"

using namespace dotent;
using namespace dotent::simd;

namespace {

std::vector<const KernelTable*> vector_tables() {
  std::vector<const KernelTable*> out;
  if (const KernelTable* t = avx2_kernels()) out.push_back(t);
  if (const KernelTable* t = neon_kernels()) out.push_back(t);
  return out;
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> v(n + 1);  // one spare so callers can misalign
  for (double& x : v) x = u(rng);
  return v;
}

bool same_bits(const double* a, const double* b, std::size_t n) {
  return std::memcmp(a, b, n * sizeof(double)) == 0;
}

const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 100, 1023};

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("dispatch") {
    const KernelTable& active = active_kernels();
    CHECK((active.isa == Isa::scalar || vector_tables().size() > 0));
    CHECK(force_isa(Isa::scalar));
    CHECK(active_kernels().isa == Isa::scalar);
    reset_dispatch();
    CHECK(&active_kernels() == &active);
    MESSAGE("active kernels: " << isa_name(active.isa));
  }

  TEST_CASE("elementwise kernels match the scalar reference bit for bit") {
    const KernelTable& ref = scalar_kernels();
    std::mt19937_64 rng(42);
    for (const KernelTable* t : vector_tables()) {
      for (std::size_t n : kSizes) {
        for (std::size_t offset : {0u, 1u}) {
          CAPTURE(n);
          CAPTURE(offset);
          auto x = random_vector(rng, n);
          auto p = random_vector(rng, n);
          auto q = random_vector(rng, n);
          std::vector<double> a(n + 1, 0.0), b(n + 1, 0.0);
          ref.recurrence_step(x.data() + offset, p.data(), q.data(), 0.7, -1.3,
                              a.data() + offset, n);
          t->recurrence_step(x.data() + offset, p.data(), q.data(), 0.7, -1.3,
                             b.data() + offset, n);
          CHECK(same_bits(a.data(), b.data(), n + 1));

          auto y1 = random_vector(rng, n);
          auto y2 = y1;
          ref.axpy(-0.37, x.data() + offset, y1.data(), n);
          t->axpy(-0.37, x.data() + offset, y2.data(), n);
          CHECK(same_bits(y1.data(), y2.data(), n + 1));

          auto s1 = random_vector(rng, n);
          auto s2 = s1;
          ref.scale(1.0 / 3.0, s1.data() + offset, n);
          t->scale(1.0 / 3.0, s2.data() + offset, n);
          CHECK(same_bits(s1.data(), s2.data(), n + 1));
        }
      }
    }
  }

  TEST_CASE("dot agrees with the scalar reference to rounding") {
    const KernelTable& ref = scalar_kernels();
    std::mt19937_64 rng(43);
    const double eps = std::numeric_limits<double>::epsilon();
    for (const KernelTable* t : vector_tables()) {
      for (std::size_t n : kSizes) {
        const auto x = random_vector(rng, n);
        const auto y = random_vector(rng, n);
        double magnitude = 0.0;
        for (std::size_t i = 0; i < n; ++i) magnitude += std::abs(x[i + 1] * y[i]);
        const double a = ref.dot(x.data() + 1, y.data(), n);
        const double b = t->dot(x.data() + 1, y.data(), n);
        CAPTURE(n);
        CHECK(std::abs(a - b) <= 2.0 * static_cast<double>(n) * eps * magnitude);
        if (n == 0) CHECK(b == 0.0);
      }
    }
  }

  TEST_CASE("stencil matches the scalar reference bit for bit") {
    const KernelTable& ref = scalar_kernels();
    std::mt19937_64 rng(44);
    for (const KernelTable* t : vector_tables()) {
      for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 67u}) {
        const auto v = random_vector(rng, n);
        const auto in = random_vector(rng, n * n);
        StencilArgs g{n, v.data(), 2.5, 0.75, 1.7};
        std::vector<double> a(n * n), b(n * n);
        ref.stencil_apply(g, in.data(), a.data());
        t->stencil_apply(g, in.data(), b.data());
        CAPTURE(n);
        CHECK(same_bits(a.data(), b.data(), n * n));
      }
    }
  }

  TEST_CASE("stencil reference against its definition") {
    const std::size_t n = 4;
    const double v[] = {1.0, -2.0, 0.5, 3.0};
    std::vector<double> in(n * n);
    for (std::size_t k = 0; k < in.size(); ++k) in[k] = 0.1 * static_cast<double>(k) - 0.4;
    StencilArgs g{n, v, 2.0, 0.5, 3.0};
    std::vector<double> out(n * n);
    scalar_kernels().stencil_apply(g, in.data(), out.data());
    auto at = [&](long i, long j) {
      if (i < 0 || j < 0 || i >= 4 || j >= 4) return 0.0;
      return in[static_cast<std::size_t>(i * 4 + j)];
    };
    for (long i = 0; i < 4; ++i) {
      for (long j = 0; j < 4; ++j) {
        double expected = (v[i] + v[j] + 2.0) * at(i, j) -
                          0.5 * (at(i - 1, j) + at(i + 1, j) + at(i, j - 1) + at(i, j + 1));
        if (i == j) expected += 3.0 * at(i, i);
        CHECK(out[static_cast<std::size_t>(i * 4 + j)] == doctest::Approx(expected).epsilon(1e-15));
      }
    }
  }

  TEST_CASE("solver results do not depend on the kernel variant beyond rounding") {
    PotentialParams p;
    p.R = 9.0;
    const BasisSpec b{30, default_omega(30, 1.2, p.outer_edge())};
    SolverOptions o;
    o.basis_gate = false;
    REQUIRE(force_isa(Isa::scalar));
    const PointSolution s = solve_point(p, b, {}, o);
    reset_dispatch();
    const PointSolution v = solve_point(p, b, {}, o);
    CHECK(v.obs.E0 == doctest::Approx(s.obs.E0).epsilon(1e-12));
    CHECK(std::abs(v.obs.L - s.obs.L) < 1e-10);
    CHECK(v.obs.U == doctest::Approx(s.obs.U).epsilon(1e-9));
  }
}
