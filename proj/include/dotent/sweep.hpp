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

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dotent/solver.hpp"

namespace dotent {

enum class SweepParam { R, d, V0, p, lambda };

std::string_view to_string(SweepParam p);
SweepParam parse_sweep_param(std::string_view s);

/// Copy of base with the swept parameter set to value.
PotentialParams with_param(PotentialParams base, SweepParam param,
                           double value);

/// One grid point of a sweep. Numeric fields are NaN when the point failed;
/// error then carries the message.
struct SweepRow {
  double value = 0.0;  // swept-parameter value
  double E_0 = 0.0;
  double L = 0.0;
  double S = 0.0;
  double S_n = 0.0;
  double U_exp = 0.0;
  double V_exp = 0.0;
  double T_exp = 0.0;
  double ratio = 0.0;
  bool ratio_limited = false;
  bool converged = false;
  std::optional<double> dL;   // d L / d(param), absent at the ends
  std::optional<double> dSn;  // d S_n / d(param)
  std::string error;

  bool ok() const { return error.empty(); }
};

enum class Column { E_0, L, S, S_n, U_exp, V_exp, T_exp, ratio };

double column_value(const SweepRow& row, Column c);

/// Three-point central differences valid on non-uniform grids; the first
/// and last samples have no derivative. Throws ConfigError for fewer than
/// three samples.
std::vector<std::optional<double>> central_derivative(
    std::span<const double> x, std::span<const double> y);

/// Same, reading a column from sweep rows; any failed row in a stencil
/// makes that derivative absent.
std::vector<std::optional<double>> central_derivative(
    std::span<const SweepRow> rows, Column column);

/// "a:step:b" segments separated by commas, e.g. "2:0.5:6,6:0.25:10".
/// Points are a + k*step; duplicates at segment joins are dropped. The
/// result must be strictly increasing. A bare number is a single point.
std::vector<double> parse_grid(std::string_view text);

inline constexpr std::string_view kDefaultRGrid = "2:0.5:6,6:0.25:10,10:0.5:30";

/// Solves every grid point with the same basis and fills both derivative
/// columns. Output does not depend on the worker count: points are
/// independent tasks collected by grid index.
std::vector<SweepRow> run_sweep(const PotentialParams& base,
                                const BasisSpec& basis, const QuadSpec& quad,
                                std::span<const double> grid,
                                const SolverOptions& options, int workers = 1,
                                SweepParam param = SweepParam::R);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

std::vector<std::string> csv_header(SweepParam param);
void write_csv(std::ostream& os, std::span<const SweepRow> rows,
               SweepParam param);
void write_csv_row(std::ostream& os, const SweepRow& row);

/// Two-column file: parameter value and derivative (empty when absent).
void write_derivative_csv(std::ostream& os, std::span<const SweepRow> rows,
                          SweepParam param, Column column);

}  // namespace dotent
