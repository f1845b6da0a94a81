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

// Data-parallel inner loops with a scalar reference implementation and
// vectorized variants chosen at runtime. Elementwise kernels produce results
// bitwise identical to the scalar reference; reductions (dot) agree to
// rounding only, because lanes change the summation order.

#include <cstddef>
#include <string_view>

namespace dotent::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Geometry of the two-particle finite-difference operator on an N x N grid:
///   out_ij = (v_i + v_j + diag) * in_ij - offdiag * (nb_x + nb_y)
///            + [i == j] * contact * in_ii
/// with zero (Dirichlet) values outside the grid.
struct StencilArgs {
  std::size_t n = 0;
  const double* v = nullptr;  // one-body potential on the 1D grid, length n
  double diag = 0.0;
  double offdiag = 0.0;
  double contact = 0.0;
};

struct KernelTable {
  Isa isa;

  /// out[i] = (a * x[i]) * p[i] - b * q[i]
  void (*recurrence_step)(const double* x, const double* p, const double* q,
                          double a, double b, double* out, std::size_t n);

  double (*dot)(const double* x, const double* y, std::size_t n);

  /// y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);

  /// x[i] *= a
  void (*scale)(double a, double* x, std::size_t n);

  /// Applies the two-particle grid operator; in and out are n*n row-major
  /// and must not alias.
  void (*stencil_apply)(const StencilArgs& args, const double* in,
                        double* out);
};

const KernelTable& scalar_kernels();

/// nullptr when the variant is not compiled in or the CPU lacks support.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best table supported by the running CPU unless overridden.
const KernelTable& active_kernels();

/// Pins the active table. Returns false (and changes nothing) when the
/// requested ISA is unavailable on this machine.
bool force_isa(Isa isa);

/// Drops any override; dispatch goes back to CPU detection.
void reset_dispatch();

}  // namespace dotent::simd
