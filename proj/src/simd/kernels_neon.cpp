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

#include "dotent/simd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace dotent::simd {
namespace {

void recurrence_step(const double* x, const double* p, const double* q,
                     double a, double b, double* out, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t ax = vmulq_f64(va, vld1q_f64(x + i));
    const float64x2_t lhs = vmulq_f64(ax, vld1q_f64(p + i));
    const float64x2_t rhs = vmulq_f64(vb, vld1q_f64(q + i));
    vst1q_f64(out + i, vsubq_f64(lhs, rhs));
  }
  for (; i < n; ++i) out[i] = (a * x[i]) * p[i] - b * q[i];
}

double dot(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    acc1 = vaddq_f64(acc1,
                     vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
  }
  const float64x2_t acc = vaddq_f64(acc0, acc1);
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) x[i] = a * x[i];
}

void stencil_apply(const StencilArgs& g, const double* in, double* out) {
  const std::size_t n = g.n;
  const float64x2_t vdiag = vdupq_n_f64(g.diag);
  const float64x2_t voff = vdupq_n_f64(g.offdiag);
  const float64x2_t zero = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = in + i * n;
    const double* above = i > 0 ? in + (i - 1) * n : nullptr;
    const double* below = i + 1 < n ? in + (i + 1) * n : nullptr;
    const float64x2_t vi = vdupq_n_f64(g.v[i]);

    out[i * n] = detail::stencil_point(g, in, i, 0);
    std::size_t j = 1;
    for (; j + 3 <= n; j += 2) {
      const float64x2_t up = above ? vld1q_f64(above + j) : zero;
      const float64x2_t down = below ? vld1q_f64(below + j) : zero;
      const float64x2_t nb = vaddq_f64(vaddq_f64(up, down),
                                       vaddq_f64(vld1q_f64(row + j - 1),
                                                 vld1q_f64(row + j + 1)));
      const float64x2_t d = vaddq_f64(vaddq_f64(vi, vld1q_f64(g.v + j)), vdiag);
      vst1q_f64(out + i * n + j,
                vsubq_f64(vmulq_f64(d, vld1q_f64(row + j)), vmulq_f64(voff, nb)));
    }
    for (; j < n; ++j) out[i * n + j] = detail::stencil_point(g, in, i, j);
    detail::add_contact(g, in, out, i);
  }
}

}  // namespace

const KernelTable* neon_kernels() {
  static const KernelTable table{Isa::neon, recurrence_step, dot, axpy, scale,
                                 stencil_apply};
  return &table;
}

}  // namespace dotent::simd

#else

namespace dotent::simd {
const KernelTable* neon_kernels() { return nullptr; }
}  // namespace dotent::simd

#endif
