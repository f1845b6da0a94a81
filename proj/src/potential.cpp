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

#include "dotent/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dotent/error.hpp"

namespace dotent {
namespace {

double well_term(double distance, double R, double p) {
  const double ratio = distance / R;
  if (ratio == 0.0) return 1.0;
  const double inner = p * std::log(ratio);
  if (inner > kOverflowExponent) return 0.0;
  return std::exp(-std::exp(inner));
}

void require(bool ok, const char* key, double value, const char* rule) {
  if (ok && std::isfinite(value)) return;
  std::ostringstream os;
  os << "potential parameter " << key << " = " << value << " violates "
     << rule;
  throw ConfigError(os.str());
}

}  // namespace

void validate(const PotentialParams& params) {
  require(params.V0 >= 0.0, "V0", params.V0, "V0 >= 0");
  require(params.d >= 0.0, "d", params.d, "d >= 0");
  require(params.R > 0.0, "R", params.R, "R > 0");
  require(params.p >= 2.0, "p", params.p, "p >= 2");
  require(params.lambda >= 0.0, "lambda", params.lambda, "lambda >= 0");
}

double v_eval(const PotentialParams& params, double x) {
  const double left = well_term(std::abs(x + params.d), params.R, params.p);
  const double right = well_term(std::abs(x - params.d), params.R, params.p);
  return -params.V0 * (left + right);
}

std::vector<double> breakpoints(const PotentialParams& params) {
  const double d = params.d;
  const double R = params.R;
  std::vector<double> b{-d - R, -d + R, d - R, d + R};
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

PotentialMinimum v_min(const PotentialParams& params) {
  constexpr int kSamplesPerInterval = 200;
  const double reach = params.d + params.R + 0.1 * params.R;

  std::vector<double> edges{-reach};
  for (double b : breakpoints(params)) {
    if (b > -reach && b < reach) edges.push_back(b);
  }
  edges.push_back(reach);

  double best_x = 0.0;
  double best_v = std::numeric_limits<double>::infinity();
  double lo = -reach;
  double hi = reach;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double a = edges[s];
    const double h = (edges[s + 1] - a) / (kSamplesPerInterval - 1);
    for (int k = 0; k < kSamplesPerInterval; ++k) {
      const double x = a + k * h;
      const double v = v_eval(params, x);
      if (v < best_v) {
        best_v = v;
        best_x = x;
        lo = std::max(edges[s], x - h);
        hi = std::min(edges[s + 1], x + h);
      }
    }
  }

  // Golden-section refinement inside the winning bracket.
  const double tol = 1e-10 * std::max(1.0, params.R);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - g * (hi - lo);
  double e = lo + g * (hi - lo);
  double fc = v_eval(params, c);
  double fe = v_eval(params, e);
  while (hi - lo > tol) {
    if (fc <= fe) {
      hi = e;
      e = c;
      fe = fc;
      c = hi - g * (hi - lo);
      fc = v_eval(params, c);
    } else {
      lo = c;
      c = e;
      fc = fe;
      e = lo + g * (hi - lo);
      fe = v_eval(params, e);
    }
  }
  const double xm = 0.5 * (lo + hi);
  const double vm = v_eval(params, xm);
  if (vm < best_v) {
    best_v = vm;
    best_x = xm;
  }
  return {std::abs(best_x), best_v};
}

}  // namespace dotent
