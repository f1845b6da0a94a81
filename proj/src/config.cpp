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

#include "dotent/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dotent/error.hpp"

namespace dotent {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value,
                            std::string_view expected) {
  throw ConfigError("key '" + std::string(key) + "': cannot parse '" +
                    std::string(value) + "' as " + std::string(expected));
}

double to_double(std::string_view key, std::string_view value) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size() ||
      !std::isfinite(v)) {
    bad_value(key, value, "a finite number");
  }
  return v;
}

int to_int(std::string_view key, std::string_view value) {
  int v = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    bad_value(key, value, "an integer");
  }
  return v;
}

bool to_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "on" || value == "1") return true;
  if (value == "false" || value == "off" || value == "0") return false;
  bad_value(key, value, "true or false");
}

std::optional<double> to_auto_double(std::string_view key,
                                     std::string_view value) {
  if (value == "auto") return std::nullopt;
  return to_double(key, value);
}

std::string num(double v) { return format_number(v); }

std::string auto_num(const std::optional<double>& v) {
  return v ? num(*v) : std::string("auto");
}

SimdChoice parse_simd(std::string_view key, std::string_view value) {
  if (value == "auto") return SimdChoice::automatic;
  if (value == "scalar") return SimdChoice::scalar;
  if (value == "avx2") return SimdChoice::avx2;
  if (value == "neon") return SimdChoice::neon;
  bad_value(key, value, "one of auto, scalar, avx2, neon");
}

// Re-throws enum parse failures with the key attached.
template <class F>
auto with_key(std::string_view key, F&& f) {
  try {
    return f();
  } catch (const ConfigError& e) {
    throw ConfigError("key '" + std::string(key) + "': " + e.what());
  }
}

}  // namespace

std::string_view to_string(SimdChoice s) {
  switch (s) {
    case SimdChoice::automatic:
      return "auto";
    case SimdChoice::scalar:
      return "scalar";
    case SimdChoice::avx2:
      return "avx2";
    case SimdChoice::neon:
      return "neon";
  }
  return "auto";
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "V0",          "d",           "R",
      "p",           "lambda",      "M",
      "omega",       "coverage",    "panel_order",
      "panels_per_interval",        "tail_tolerance",
      "R_grid",      "sweep_param", "shift_mode",
      "normalization",              "denom_floor",
      "basis_gate",  "gate_tolerance",
      "workers",     "out",         "oracle_N",
      "oracle_X",    "M_grid",      "simd"};
  return keys;
}

void set_value(RunConfig& c, std::string_view key, std::string_view raw) {
  const std::string_view v = trim(raw);
  if (key == "V0") c.potential.V0 = to_double(key, v);
  else if (key == "d") c.potential.d = to_double(key, v);
  else if (key == "R") c.potential.R = to_double(key, v);
  else if (key == "p") c.potential.p = to_double(key, v);
  else if (key == "lambda") c.potential.lambda = to_double(key, v);
  else if (key == "M") c.M = to_int(key, v);
  else if (key == "omega") c.omega = to_auto_double(key, v);
  else if (key == "coverage") c.coverage = to_double(key, v);
  else if (key == "panel_order") c.quad.panel_order = to_int(key, v);
  else if (key == "panels_per_interval") c.quad.panels_per_interval = to_int(key, v);
  else if (key == "tail_tolerance") c.quad.tail_tolerance = to_double(key, v);
  else if (key == "R_grid") {
    with_key(key, [&] { return parse_grid(v); });
    c.R_grid = std::string(v);
  } else if (key == "sweep_param") {
    c.sweep_param = with_key(key, [&] { return parse_sweep_param(v); });
  } else if (key == "shift_mode") {
    c.shift_mode = with_key(key, [&] { return parse_shift_mode(v); });
  } else if (key == "normalization") {
    c.normalization = with_key(key, [&] { return parse_normalization(v); });
  } else if (key == "denom_floor") c.denom_floor = to_double(key, v);
  else if (key == "basis_gate") c.basis_gate = to_bool(key, v);
  else if (key == "gate_tolerance") c.gate_tolerance = to_double(key, v);
  else if (key == "workers") c.workers = to_int(key, v);
  else if (key == "out") c.out = std::string(v);
  else if (key == "oracle_N") c.oracle_N = to_int(key, v);
  else if (key == "oracle_X") c.oracle_X = to_auto_double(key, v);
  else if (key == "M_grid") {
    with_key(key, [&] { return parse_grid(v); });
    c.M_grid = std::string(v);
  } else if (key == "simd") c.simd = parse_simd(key, v);
  else throw ConfigError("unknown key '" + std::string(key) + "'");
}

std::string get_value(const RunConfig& c, std::string_view key) {
  if (key == "V0") return num(c.potential.V0);
  if (key == "d") return num(c.potential.d);
  if (key == "R") return num(c.potential.R);
  if (key == "p") return num(c.potential.p);
  if (key == "lambda") return num(c.potential.lambda);
  if (key == "M") return std::to_string(c.M);
  if (key == "omega") return auto_num(c.omega);
  if (key == "coverage") return num(c.coverage);
  if (key == "panel_order") return std::to_string(c.quad.panel_order);
  if (key == "panels_per_interval") return std::to_string(c.quad.panels_per_interval);
  if (key == "tail_tolerance") return num(c.quad.tail_tolerance);
  if (key == "R_grid") return c.R_grid;
  if (key == "sweep_param") return std::string(to_string(c.sweep_param));
  if (key == "shift_mode") return std::string(to_string(c.shift_mode));
  if (key == "normalization") return std::string(to_string(c.normalization));
  if (key == "denom_floor") return num(c.denom_floor);
  if (key == "basis_gate") return c.basis_gate ? "true" : "false";
  if (key == "gate_tolerance") return num(c.gate_tolerance);
  if (key == "workers") return std::to_string(c.workers);
  if (key == "out") return c.out;
  if (key == "oracle_N") return std::to_string(c.oracle_N);
  if (key == "oracle_X") return auto_num(c.oracle_X);
  if (key == "M_grid") return c.M_grid;
  if (key == "simd") return std::string(to_string(c.simd));
  throw ConfigError("unknown key '" + std::string(key) + "'");
}

RunConfig parse_config(std::string_view text, std::string_view source) {
  RunConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where + ": expected 'key = value', got '" +
                        std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    try {
      set_value(cfg, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

std::string serialize(const RunConfig& cfg) {
  std::string out;
  for (const std::string& key : config_keys()) {
    out += key + " = " + get_value(cfg, key) + "\n";
  }
  return out;
}

void validate(const RunConfig& cfg) {
  validate(cfg.potential);
  validate(cfg.quad);
  if (cfg.M < 2) throw ConfigError("key 'M': basis size must be at least 2");
  if (cfg.omega && !(*cfg.omega > 0.0)) {
    throw ConfigError("key 'omega': must be positive or auto");
  }
  if (!(cfg.coverage > 0.0)) throw ConfigError("key 'coverage': must be positive");
  if (!(cfg.denom_floor >= 0.0)) {
    throw ConfigError("key 'denom_floor': must be non-negative");
  }
  if (!(cfg.gate_tolerance > 0.0)) {
    throw ConfigError("key 'gate_tolerance': must be positive");
  }
  if (cfg.workers < 1) throw ConfigError("key 'workers': must be at least 1");
  if (cfg.oracle_N < 3) throw ConfigError("key 'oracle_N': must be at least 3");
  if (cfg.oracle_X && !(*cfg.oracle_X > 0.0)) {
    throw ConfigError("key 'oracle_X': must be positive or auto");
  }
}

std::string resolve_out_dir(const RunConfig& cfg) {
  if (!cfg.out.empty()) return cfg.out;
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return kDefaultOutDir;
}

SolverOptions solver_options(const RunConfig& cfg) {
  SolverOptions o;
  o.coverage_factor = cfg.coverage;
  o.basis_gate = cfg.basis_gate;
  o.gate_tolerance = cfg.gate_tolerance;
  o.normalization = cfg.normalization;
  o.shift_mode = cfg.shift_mode;
  o.denom_floor = cfg.denom_floor;
  return o;
}

BasisSpec basis_for(const RunConfig& cfg, double outer_edge) {
  BasisSpec b;
  b.M = cfg.M;
  b.omega = cfg.omega ? *cfg.omega : default_omega(cfg.M, cfg.coverage, outer_edge);
  return b;
}

GridSpec oracle_grid(const RunConfig& cfg) {
  GridSpec g = default_grid(cfg.potential, cfg.oracle_N);
  if (cfg.oracle_X) g.X = *cfg.oracle_X;
  return g;
}

void apply_simd(const RunConfig& cfg) {
  simd::Isa isa = simd::Isa::scalar;
  switch (cfg.simd) {
    case SimdChoice::automatic:
      simd::reset_dispatch();
      return;
    case SimdChoice::scalar:
      isa = simd::Isa::scalar;
      break;
    case SimdChoice::avx2:
      isa = simd::Isa::avx2;
      break;
    case SimdChoice::neon:
      isa = simd::Isa::neon;
      break;
  }
  if (!simd::force_isa(isa)) {
    throw ConfigError("key 'simd': '" + std::string(to_string(cfg.simd)) +
                      "' kernels are not available on this machine");
  }
}

}  // namespace dotent
