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

#include "dotent/sweep.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <ostream>
#include <thread>

#include "dotent/error.hpp"

namespace dotent {

std::string_view to_string(SweepParam p) {
  switch (p) {
    case SweepParam::R:
      return "R";
    case SweepParam::d:
      return "d";
    case SweepParam::V0:
      return "V0";
    case SweepParam::p:
      return "p";
    case SweepParam::lambda:
      return "lambda";
  }
  return "R";
}

SweepParam parse_sweep_param(std::string_view s) {
  for (SweepParam p : {SweepParam::R, SweepParam::d, SweepParam::V0,
                       SweepParam::p, SweepParam::lambda}) {
    if (s == to_string(p)) return p;
  }
  throw ConfigError("sweep_param must be one of R, d, V0, p, lambda; got '" +
                    std::string(s) + "'");
}

PotentialParams with_param(PotentialParams base, SweepParam param,
                           double value) {
  switch (param) {
    case SweepParam::R:
      base.R = value;
      break;
    case SweepParam::d:
      base.d = value;
      break;
    case SweepParam::V0:
      base.V0 = value;
      break;
    case SweepParam::p:
      base.p = value;
      break;
    case SweepParam::lambda:
      base.lambda = value;
      break;
  }
  return base;
}

double column_value(const SweepRow& row, Column c) {
  switch (c) {
    case Column::E_0:
      return row.E_0;
    case Column::L:
      return row.L;
    case Column::S:
      return row.S;
    case Column::S_n:
      return row.S_n;
    case Column::U_exp:
      return row.U_exp;
    case Column::V_exp:
      return row.V_exp;
    case Column::T_exp:
      return row.T_exp;
    case Column::ratio:
      return row.ratio;
  }
  return std::nan("");
}

std::vector<std::optional<double>> central_derivative(
    std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ConfigError("derivative needs matching abscissa and values");
  }
  if (x.size() < 3) {
    throw ConfigError("central derivative needs at least 3 samples, got " +
                      std::to_string(x.size()));
  }
  std::vector<std::optional<double>> out(x.size());
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double h1 = x[i] - x[i - 1];
    const double h2 = x[i + 1] - x[i];
    const double d = -h2 / (h1 * (h1 + h2)) * y[i - 1] +
                     (h2 - h1) / (h1 * h2) * y[i] +
                     h1 / (h2 * (h1 + h2)) * y[i + 1];
    if (std::isfinite(d)) out[i] = d;
  }
  return out;
}

std::vector<std::optional<double>> central_derivative(
    std::span<const SweepRow> rows, Column column) {
  std::vector<double> x;
  std::vector<double> y;
  for (const SweepRow& r : rows) {
    x.push_back(r.value);
    y.push_back(r.ok() ? column_value(r, column) : std::nan(""));
  }
  return central_derivative(x, y);
}

namespace {

double parse_double(std::string_view s, std::string_view context) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError("cannot parse '" + std::string(s) + "' as a number in grid '" +
                      std::string(context) + "'");
  }
  return v;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> out;
  std::string_view rest = text;
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::string_view seg = rest.substr(0, comma);
    const std::size_t c1 = seg.find(':');
    if (c1 == std::string_view::npos) {
      out.push_back(parse_double(seg, text));
    } else {
      const std::size_t c2 = seg.find(':', c1 + 1);
      if (c2 == std::string_view::npos) {
        throw ConfigError("grid segment '" + std::string(seg) +
                          "' must look like start:step:stop");
      }
      const double a = parse_double(seg.substr(0, c1), text);
      const double step = parse_double(seg.substr(c1 + 1, c2 - c1 - 1), text);
      const double b = parse_double(seg.substr(c2 + 1), text);
      if (!(step > 0.0) || b < a) {
        throw ConfigError("grid segment '" + std::string(seg) +
                          "' needs step > 0 and stop >= start");
      }
      const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9));
      for (long k = 0; k <= count; ++k) {
        const double v = a + static_cast<double>(k) * step;
        if (!out.empty() && v == out.back()) continue;
        out.push_back(v);
      }
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (!(out[i] > out[i - 1])) {
      throw ConfigError("grid '" + std::string(text) +
                        "' is not strictly increasing");
    }
  }
  if (out.empty()) throw ConfigError("grid is empty");
  return out;
}

std::vector<SweepRow> run_sweep(const PotentialParams& base,
                                const BasisSpec& basis, const QuadSpec& quad,
                                std::span<const double> grid,
                                const SolverOptions& options, int workers,
                                SweepParam param) {
  if (grid.empty()) throw ConfigError("sweep grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw ConfigError("sweep grid must be strictly increasing");
    }
  }
  validate(basis);
  double widest = 0.0;
  for (double v : grid) widest = std::max(widest, with_param(base, param, v).outer_edge());
  check_coverage(basis, widest, options.coverage_factor);

  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < grid.size();
         i = next.fetch_add(1)) {
      SweepRow& row = rows[i];
      row.value = grid[i];
      try {
        const PotentialParams params = with_param(base, param, grid[i]);
        const PointSolution sol = solve_point(params, basis, quad, options);
        const PointObservables& o = sol.obs;
        row.E_0 = o.E0;
        row.L = o.L;
        row.S = o.S;
        row.S_n = o.Sn;
        row.U_exp = o.U;
        row.V_exp = o.V;
        row.T_exp = o.T;
        row.ratio = o.ratio.value;
        row.ratio_limited = o.ratio.precision_limited;
        row.converged = o.converged;
      } catch (const std::exception& e) {
        const double nan = std::nan("");
        row.E_0 = row.L = row.S = row.S_n = nan;
        row.U_exp = row.V_exp = row.T_exp = row.ratio = nan;
        row.error = e.what();
      }
    }
  };

  const int n_workers =
      std::max(1, std::min<int>(workers, static_cast<int>(grid.size())));
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < n_workers; ++w) pool.emplace_back(work);
    work();
  }

  if (rows.size() >= 3) {
    const auto dl = central_derivative(rows, Column::L);
    const auto ds = central_derivative(rows, Column::S_n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].dL = dl[i];
      rows[i].dSn = ds[i];
    }
  }
  return rows;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

std::vector<std::string> csv_header(SweepParam param) {
  const std::string p(to_string(param));
  return {p,       "E_0",   "L",     "S",          "S_n",
          "U_exp", "V_exp", "T_exp", "ratio",      "ratio_flag",
          "converged", "dL_d" + p, "dSn_d" + p, "error"};
}

void write_csv_row(std::ostream& os, const SweepRow& r) {
  os << format_number(r.value) << ',';
  if (r.ok()) {
    os << format_number(r.E_0) << ',' << format_number(r.L) << ','
       << format_number(r.S) << ',' << format_number(r.S_n) << ','
       << format_number(r.U_exp) << ',' << format_number(r.V_exp) << ','
       << format_number(r.T_exp) << ',' << format_number(r.ratio) << ','
       << (r.ratio_limited ? "precision-limited" : "ok") << ','
       << (r.converged ? "true" : "false") << ',';
  } else {
    os << ",,,,,,,,,,";
  }
  os << optional_number(r.dL) << ',' << optional_number(r.dSn) << ','
     << quote(r.error) << '\n';
}

void write_csv(std::ostream& os, std::span<const SweepRow> rows,
               SweepParam param) {
  const auto header = csv_header(param);
  for (std::size_t i = 0; i < header.size(); ++i) {
    os << (i ? "," : "") << header[i];
  }
  os << '\n';
  for (const SweepRow& r : rows) write_csv_row(os, r);
}

void write_derivative_csv(std::ostream& os, std::span<const SweepRow> rows,
                          SweepParam param, Column column) {
  const std::string p(to_string(param));
  const bool is_l = column == Column::L;
  os << p << ',' << (is_l ? "dL_d" : "dSn_d") << p << '\n';
  for (const SweepRow& r : rows) {
    os << format_number(r.value) << ',' << optional_number(is_l ? r.dL : r.dSn)
       << '\n';
  }
}

}  // namespace dotent
