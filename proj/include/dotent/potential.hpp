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

#include <vector>

namespace dotent {

/// Two-center power-exponential confinement
///   V(x) = -V0 * ( exp[-(|x+d|/R)^p] + exp[-(|x-d|/R)^p] )
/// together with the strength of the contact repulsion lambda*delta(x1-x2).
struct PotentialParams {
  double V0 = 10.0;
  double d = 8.0;
  double R = 10.0;
  double p = 200.0;
  double lambda = 1.0;

  double outer_edge() const { return d + R; }

  friend bool operator==(const PotentialParams&,
                         const PotentialParams&) = default;
};

/// Throws ConfigError unless V0 >= 0, d >= 0, R > 0, p >= 2, lambda >= 0.
void validate(const PotentialParams& params);

/// Finite for every finite x; ratio^p is evaluated in the log domain and a
/// term whose inner exponent exceeds kOverflowExponent is exactly zero.
double v_eval(const PotentialParams& params, double x);

inline constexpr double kOverflowExponent = 700.0;

/// Sorted, deduplicated {-d-R, -d+R, d-R, d+R}: where each well term
/// crosses exp(-1) and, for large p, jumps between ~1 and ~0.
std::vector<double> breakpoints(const PotentialParams& params);

struct PotentialMinimum {
  double x;  // non-negative representative of the minimizer
  double v;
};

/// Global minimum of V by breakpoint-aware sampling refined with a
/// golden-section search.
PotentialMinimum v_min(const PotentialParams& params);

}  // namespace dotent
