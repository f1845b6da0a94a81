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

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace dotent::simd {
namespace {

void recurrence_step(const double* x, const double* p, const double* q,
                     double a, double b, double* out, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ax = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    const __m256d lhs = _mm256_mul_pd(ax, _mm256_loadu_pd(p + i));
    const __m256d rhs = _mm256_mul_pd(vb, _mm256_loadu_pd(q + i));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(lhs, rhs));
  }
  for (; i < n; ++i) out[i] = (a * x[i]) * p[i] - b * q[i];
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(
        acc0, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(x + i + 4),
                                             _mm256_loadu_pd(y + i + 4)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_add_pd(_mm256_loadu_pd(y + i),
                                    _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] = a * x[i];
}

void stencil_apply(const StencilArgs& g, const double* in, double* out) {
  const std::size_t n = g.n;
  const __m256d vdiag = _mm256_set1_pd(g.diag);
  const __m256d voff = _mm256_set1_pd(g.offdiag);
  const __m256d zero = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = in + i * n;
    const double* above = i > 0 ? in + (i - 1) * n : nullptr;
    const double* below = i + 1 < n ? in + (i + 1) * n : nullptr;
    const __m256d vi = _mm256_set1_pd(g.v[i]);

    out[i * n] = detail::stencil_point(g, in, i, 0);
    std::size_t j = 1;
    for (; j + 5 <= n; j += 4) {
      const __m256d up = above ? _mm256_loadu_pd(above + j) : zero;
      const __m256d down = below ? _mm256_loadu_pd(below + j) : zero;
      const __m256d left = _mm256_loadu_pd(row + j - 1);
      const __m256d right = _mm256_loadu_pd(row + j + 1);
      const __m256d nb =
          _mm256_add_pd(_mm256_add_pd(up, down), _mm256_add_pd(left, right));
      const __m256d d =
          _mm256_add_pd(_mm256_add_pd(vi, _mm256_loadu_pd(g.v + j)), vdiag);
      const __m256d r = _mm256_sub_pd(_mm256_mul_pd(d, _mm256_loadu_pd(row + j)),
                                      _mm256_mul_pd(voff, nb));
      _mm256_storeu_pd(out + i * n + j, r);
    }
    for (; j < n; ++j) out[i * n + j] = detail::stencil_point(g, in, i, j);
    detail::add_contact(g, in, out, i);
  }
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{Isa::avx2, recurrence_step, dot, axpy, scale,
                                 stencil_apply};
  return supported ? &table : nullptr;
}

}  // namespace dotent::simd

#else

namespace dotent::simd {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace dotent::simd

#endif
