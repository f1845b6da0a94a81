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

// Shared scalar expressions. Every variant evaluates boundary and remainder
// points through these so that results match the reference bit for bit.

#include <cstddef>

#include "dotent/simd/kernels.hpp"

namespace dotent::simd::detail {

inline double stencil_point(const StencilArgs& g, const double* in,
                            std::size_t i, std::size_t j) {
  const std::size_t n = g.n;
  const double up = i > 0 ? in[(i - 1) * n + j] : 0.0;
  const double down = i + 1 < n ? in[(i + 1) * n + j] : 0.0;
  const double left = j > 0 ? in[i * n + j - 1] : 0.0;
  const double right = j + 1 < n ? in[i * n + j + 1] : 0.0;
  const double nb = (up + down) + (left + right);
  return ((g.v[i] + g.v[j]) + g.diag) * in[i * n + j] - g.offdiag * nb;
}

inline void add_contact(const StencilArgs& g, const double* in, double* out,
                        std::size_t i) {
  const std::size_t k = i * g.n + i;
  out[k] = out[k] + g.contact * in[k];
}

}  // namespace dotent::simd::detail
