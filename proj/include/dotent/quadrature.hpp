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

#include <functional>
#include <span>
#include <vector>

#include "dotent/basis.hpp"
#include "dotent/potential.hpp"

namespace dotent {

struct QuadSpec {
  int panel_order = 32;          // Gauss-Legendre points per panel
  int panels_per_interval = 8;   // panels per breakpoint-delimited interval
  double tail_tolerance = 1e-14; // basis envelope at the truncation edge

  friend bool operator==(const QuadSpec&, const QuadSpec&) = default;
};

void validate(const QuadSpec& spec);

/// Nodes in evaluation order and matching weights.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre rule on [-1, 1], ascending nodes. Cached per order.
const QuadRule& gauss_legendre(int order);

/// Gauss-Hermite nodes t_k for the weight exp(-t^2). The stored weights are
/// w_k * exp(t_k^2), so a rule applied to an integrand that already carries
/// its Gaussian factor needs no extra scaling. Cached per order.
const QuadRule& gauss_hermite_scaled(int order);

/// Composite Gauss-Legendre over [-X, X], split at every break inside the
/// domain and subdivided into panels; nodes run left to right.
QuadRule composite_rule(std::span<const double> breaks, double halfwidth,
                        const QuadSpec& spec);

/// Left-to-right weighted sum; throws NumericalError on a non-finite
/// integrand value, naming the node.
double integrate(const QuadRule& rule,
                 const std::function<double(double)>& f);

double integrate_piecewise(const std::function<double(double)>& f,
                           std::span<const double> breaks, double halfwidth,
                           const QuadSpec& spec);

/// Rule exact for p(x) exp(-a x^2) with deg p <= poly_degree, expressed in x
/// (nodes t_k / sqrt(a), weights w_k exp(t_k^2) / sqrt(a)).
QuadRule gaussian_rule(int poly_degree, double a);

/// Integral of g over the real line, where g = polynomial * exp(-a x^2) and
/// the polynomial degree is at most poly_degree. g is passed whole.
double gaussian_weight_integrate(int poly_degree, double a,
                                 const std::function<double(double)>& g);

/// Half-width X of the integration domain: every basis envelope is below
/// the tail tolerance at |x| = X.
double truncation_halfwidth(const BasisSpec& basis,
                            const PotentialParams& params,
                            const QuadSpec& quad);

}  // namespace dotent
