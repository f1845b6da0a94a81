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

#include "dotent/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dotent/error.hpp"

namespace dotent {
namespace {

QuadRule build_gauss_legendre(int n) {
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

// Normalized Hermite functions psi_{n-1}(t), psi_n(t) (oscillator with
// omega = 1) plus the running sum of squares psi_0^2 + ... + psi_{n-1}^2.
struct HermiteState {
  double prev;
  double cur;
  double sum_sq;
};

HermiteState hermite_functions(int n, double t) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * t * t);
  double sum_sq = 0.0;
  for (int k = 0; k < n; ++k) {
    sum_sq += cur * cur;
    const double next =
        (std::sqrt(2.0 / (k + 1)) * t) * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return {prev, cur, sum_sq};
}

QuadRule build_gauss_hermite_scaled(int n) {
  // Golub-Welsch for the starting nodes, then Newton on psi_n.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& guess = es.eigenvalues();

  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = n / 2;
  for (int i = 0; i < half; ++i) {
    double t = 0.5 * (guess(n - 1 - i) - guess(i));
    for (int it = 0; it < 8; ++it) {
      const HermiteState s = hermite_functions(n, t);
      // psi_n' = -t psi_n + sqrt(2n) psi_{n-1}
      const double deriv = -t * s.cur + std::sqrt(2.0 * n) * s.prev;
      const double dt = s.cur / deriv;
      t -= dt;
      if (std::abs(dt) < 1e-15 * std::max(1.0, std::abs(t))) break;
    }
    const double w = 1.0 / hermite_functions(n, t).sum_sq;
    rule.nodes[i] = -t;
    rule.nodes[n - 1 - i] = t;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[half] = 0.0;
    rule.weights[half] = 1.0 / hermite_functions(n, 0.0).sum_sq;
  }
  return rule;
}

template <QuadRule (*Build)(int)>
const QuadRule& cached(int order) {
  static std::shared_mutex mutex;
  static std::map<int, QuadRule> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  QuadRule rule = Build(order);
  std::unique_lock lock(mutex);
  return cache.try_emplace(order, std::move(rule)).first->second;
}

// Appends the edges after a of n panels on [a, b], clustered toward a
// (toward_a) or toward b: x_k = a + (b - a) (k/n)^kGrading, or its mirror.
constexpr int kGrading = 3;

void append_graded(double a, double b, int n, bool toward_a,
                   std::vector<double>& out) {
  for (int k = 1; k < n; ++k) {
    const double s = static_cast<double>(k) / n;
    out.push_back(toward_a ? a + (b - a) * std::pow(s, kGrading)
                           : b - (b - a) * std::pow(1.0 - s, kGrading));
  }
  out.push_back(b);
}

}  // namespace

void validate(const QuadSpec& spec) {
  if (spec.panel_order < 2) {
    throw ConfigError("panel_order must be at least 2");
  }
  if (spec.panels_per_interval < 1) {
    throw ConfigError("panels_per_interval must be at least 1");
  }
  if (!(spec.tail_tolerance > 0.0 && spec.tail_tolerance < 1.0)) {
    throw ConfigError("tail_tolerance must lie in (0, 1)");
  }
}

const QuadRule& gauss_legendre(int order) {
  if (order < 1) throw ConfigError("Gauss-Legendre order must be positive");
  return cached<build_gauss_legendre>(order);
}

const QuadRule& gauss_hermite_scaled(int order) {
  if (order < 1) throw ConfigError("Gauss-Hermite order must be positive");
  return cached<build_gauss_hermite_scaled>(order);
}

QuadRule composite_rule(std::span<const double> breaks, double halfwidth,
                        const QuadSpec& spec) {
  validate(spec);
  if (!(halfwidth > 0.0)) {
    throw ConfigError("integration half-width must be positive");
  }
  std::vector<double> edges{-halfwidth};
  for (double b : breaks) {
    if (b > -halfwidth && b < halfwidth) edges.push_back(b);
  }
  edges.push_back(halfwidth);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Panel edges inside each sub-interval are graded algebraically toward
  // every end that is a break (never toward the truncation edges): near a
  // break the steep wall varies on a scale ~R/p, far smaller than a uniform
  // panel, while away from it the integrand is smooth.
  std::vector<double> panel_edges;
  const int n = spec.panels_per_interval;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double a = edges[s];
    const double b = edges[s + 1];
    const bool toward_a = s > 0;
    const bool toward_b = s + 2 < edges.size();
    if (panel_edges.empty()) panel_edges.push_back(a);
    if (toward_a && toward_b && n >= 2) {
      const double m = 0.5 * (a + b);
      append_graded(a, m, n / 2, true, panel_edges);
      append_graded(m, b, n - n / 2, false, panel_edges);
    } else if (toward_a != toward_b) {
      append_graded(a, b, n, toward_a, panel_edges);
    } else {
      for (int k = 1; k < n; ++k) {
        panel_edges.push_back(a + (b - a) * static_cast<double>(k) / n);
      }
      panel_edges.push_back(b);
    }
  }

  const QuadRule& gl = gauss_legendre(spec.panel_order);
  QuadRule rule;
  const std::size_t total =
      (panel_edges.size() - 1) * static_cast<std::size_t>(spec.panel_order);
  rule.nodes.reserve(total);
  rule.weights.reserve(total);
  for (std::size_t k = 0; k + 1 < panel_edges.size(); ++k) {
    const double mid = 0.5 * (panel_edges[k] + panel_edges[k + 1]);
    const double rad = 0.5 * (panel_edges[k + 1] - panel_edges[k]);
    for (std::size_t q = 0; q < gl.size(); ++q) {
      rule.nodes.push_back(mid + rad * gl.nodes[q]);
      rule.weights.push_back(rad * gl.weights[q]);
    }
  }
  return rule;
}

double integrate(const QuadRule& rule,
                 const std::function<double(double)>& f) {
  double sum = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double value = f(rule.nodes[q]);
    if (!std::isfinite(value)) {
      std::ostringstream os;
      os.precision(17);
      os << "non-finite integrand value " << value << " at x = "
         << rule.nodes[q];
      throw NumericalError(os.str());
    }
    sum += rule.weights[q] * value;
  }
  return sum;
}

double integrate_piecewise(const std::function<double(double)>& f,
                           std::span<const double> breaks, double halfwidth,
                           const QuadSpec& spec) {
  return integrate(composite_rule(breaks, halfwidth, spec), f);
}

QuadRule gaussian_rule(int poly_degree, double a) {
  if (!(a > 0.0)) throw ConfigError("Gaussian rate must be positive");
  const int order = std::max(poly_degree, 0) / 2 + 1;
  const QuadRule& base = gauss_hermite_scaled(order);
  const double s = 1.0 / std::sqrt(a);
  QuadRule rule;
  rule.nodes.resize(base.size());
  rule.weights.resize(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    rule.nodes[k] = base.nodes[k] * s;
    rule.weights[k] = base.weights[k] * s;
  }
  return rule;
}

double gaussian_weight_integrate(int poly_degree, double a,
                                 const std::function<double(double)>& g) {
  return integrate(gaussian_rule(poly_degree, a), g);
}

double truncation_halfwidth(const BasisSpec& basis,
                            const PotentialParams& params,
                            const QuadSpec& quad) {
  const double margin =
      std::sqrt(2.0 * std::log(1.0 / quad.tail_tolerance) / basis.omega);
  return std::max(params.outer_edge(), turning_point(basis)) + margin;
}

}  // namespace dotent
