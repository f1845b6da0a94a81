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

#include "dotent/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "dotent/config.hpp"
#include "dotent/error.hpp"

extern "C" void openblas_set_num_threads(int);

namespace dotent {

void pin_blas_threads() { openblas_set_num_threads(1); }

namespace {

std::string flag_for(const std::string& key) {
  std::string f = key;
  std::replace(f.begin(), f.end(), '_', '-');
  return f.size() == 1 && key == "M" ? "-M,--M" : "--" + f;
}

/// Flags for every config key; values are applied over the config file.
struct FlagSet {
  std::optional<std::string> config_path;
  std::map<std::string, std::optional<std::string>> values;

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "config file of key = value lines");
    for (const std::string& key : config_keys()) {
      app.add_option(flag_for(key), values[key], "overrides '" + key + "'");
    }
  }

  RunConfig resolve() const {
    RunConfig cfg = config_path ? load_config(*config_path) : RunConfig{};
    for (const auto& [key, value] : values) {
      if (!value) continue;
      try {
        set_value(cfg, key, *value);
      } catch (const ConfigError& e) {
        throw ConfigError(std::string("command line: ") + e.what());
      }
    }
    validate(cfg);
    apply_simd(cfg);
    return cfg;
  }
};

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  f << body;
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
}

/// Sidecar: the exact config serialization, then derived values as
/// comments so the file still parses back to the same config.
std::string metadata(const RunConfig& cfg, const BasisSpec& basis,
                     std::size_t rows) {
  std::string s = serialize(cfg);
  s += "# version = " DOTENT_VERSION "\n";
  s += "# omega_resolved = " + format_number(basis.omega) + "\n";
  s += "# turning_point = " + format_number(turning_point(basis)) + "\n";
  s += "# simd = " + std::string(simd::isa_name(simd::active_kernels().isa)) + "\n";
  s += "# rows = " + std::to_string(rows) + "\n";
  return s;
}

SweepRow row_from(double value, const PointObservables& o) {
  SweepRow r;
  r.value = value;
  r.E_0 = o.E0;
  r.L = o.L;
  r.S = o.S;
  r.S_n = o.Sn;
  r.U_exp = o.U;
  r.V_exp = o.V;
  r.T_exp = o.T;
  r.ratio = o.ratio.value;
  r.ratio_limited = o.ratio.precision_limited;
  r.converged = o.converged;
  return r;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const BasisSpec basis = basis_for(cfg, cfg.potential.outer_edge());
  const PointSolution sol =
      solve_point(cfg.potential, basis, cfg.quad, solver_options(cfg));
  const SweepRow row = row_from(cfg.potential.R, sol.obs);
  const SweepRow rows[] = {row};
  write_csv(out, rows, SweepParam::R);
  return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> grid = parse_grid(cfg.R_grid);
  double widest = 0.0;
  for (double v : grid) {
    widest = std::max(widest, with_param(cfg.potential, cfg.sweep_param, v).outer_edge());
  }
  const BasisSpec basis = basis_for(cfg, widest);
  const std::vector<SweepRow> rows =
      run_sweep(cfg.potential, basis, cfg.quad, grid, solver_options(cfg),
                cfg.workers, cfg.sweep_param);

  const std::filesystem::path dir = resolve_out_dir(cfg);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "'");
  const std::string p(to_string(cfg.sweep_param));
  std::ostringstream csv;
  write_csv(csv, rows, cfg.sweep_param);
  write_file(dir / "sweep.csv", csv.str());
  write_file(dir / "sweep.meta", metadata(cfg, basis, rows.size()));
  std::ostringstream dl;
  write_derivative_csv(dl, rows, cfg.sweep_param, Column::L);
  write_file(dir / ("dL_d" + p + ".csv"), dl.str());
  std::ostringstream ds;
  write_derivative_csv(ds, rows, cfg.sweep_param, Column::S_n);
  write_file(dir / ("dSn_d" + p + ".csv"), ds.str());

  std::size_t failed = 0;
  std::optional<std::size_t> peak;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].ok()) ++failed;
    if (rows[i].dL && (!peak || std::abs(*rows[i].dL) > std::abs(*rows[*peak].dL))) {
      peak = i;
    }
  }
  out << "wrote " << rows.size() << " rows to " << (dir / "sweep.csv").string()
      << '\n';
  if (peak) {
    out << "largest |dL/d" << p << "| at " << p << " = "
        << format_number(rows[*peak].value) << '\n';
  }
  if (failed > 0) {
    out << failed << " point(s) failed; see the error column\n";
    return static_cast<int>(ExitCode::numerical);
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const OracleResult r = grid_solve(cfg.potential, oracle_grid(cfg));
  out << "R,E_0,L,U_exp,N,X,dx,stencil,iterations,residual\n";
  out << format_number(cfg.potential.R) << ',' << format_number(r.E0) << ','
      << format_number(r.L) << ',' << format_number(r.U) << ',' << r.grid.N
      << ',' << format_number(r.grid.X) << ',' << format_number(r.grid.dx())
      << ',' << r.stencil << ',' << r.iterations << ','
      << format_number(r.residual) << '\n';
  return 0;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> ms = parse_grid(cfg.M_grid);
  const double edge = cfg.potential.outer_edge();
  // One fixed omega for the whole table, sized for the smallest basis
  // unless given explicitly.
  RunConfig fixed = cfg;
  fixed.M = static_cast<int>(ms.front());
  const double omega = basis_for(fixed, edge).omega;
  SolverOptions opts = solver_options(cfg);
  opts.basis_gate = false;
  out << "M,omega,E_0,L,S_n,delta_E,converged\n";
  std::optional<double> prev;
  for (double mv : ms) {
    const int M = static_cast<int>(mv);
    if (M != mv) throw ConfigError("key 'M_grid': basis sizes must be integers");
    BasisSpec basis{M, omega};
    const PointSolution sol = solve_point(cfg.potential, basis, cfg.quad, opts);
    const double delta = prev ? std::abs(sol.obs.E0 - *prev) : std::nan("");
    out << M << ',' << format_number(omega) << ',' << format_number(sol.obs.E0)
        << ',' << format_number(sol.obs.L) << ',' << format_number(sol.obs.Sn)
        << ',' << (prev ? format_number(delta) : std::string()) << ','
        << (prev ? (delta < cfg.gate_tolerance ? "true" : "false") : "")
        << '\n';
    prev = sol.obs.E0;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  pin_blas_threads();
  CLI::App app{"Two-particle ground states in a double well"};
  app.set_version_flag("--version", DOTENT_VERSION);
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, std::ostream&);
  };
  const Command commands[] = {
      {"solve", "ground state and observables at one parameter point", cmd_solve},
      {"sweep", "observables and derivatives across a parameter grid", cmd_sweep},
      {"oracle", "independent finite-difference grid solution", cmd_oracle},
      {"converge", "ground energy against basis size at fixed omega", cmd_converge},
  };
  std::vector<FlagSet> flags(std::size(commands));
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].name, commands[i].help);
    flags[i].attach(*sub);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::config);
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) {
        return commands[i].run(flags[i].resolve(), out);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::numerical);
  }
  return static_cast<int>(ExitCode::config);
}

}  // namespace dotent
