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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dotent/oracle.hpp"
#include "dotent/quadrature.hpp"
#include "dotent/simd/kernels.hpp"
#include "dotent/solver.hpp"
#include "dotent/sweep.hpp"

namespace dotent {

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "DOTENT_OUT_DIR";
inline constexpr const char* kDefaultOutDir = "dotent_out";

enum class SimdChoice { automatic, scalar, avx2, neon };

/// Every run setting. Each field has a config-file key of the same name and
/// a command-line flag (underscores become hyphens).
struct RunConfig {
  PotentialParams potential{};
  int M = 50;
  std::optional<double> omega;  // empty means derived from M and the widest well
  double coverage = kDefaultCoverageFactor;
  QuadSpec quad{};
  std::string R_grid{kDefaultRGrid};
  SweepParam sweep_param = SweepParam::R;
  ShiftMode shift_mode = ShiftMode::global_min;
  Normalization normalization = Normalization::one;
  double denom_floor = kDefaultDenomFloor;
  bool basis_gate = true;
  double gate_tolerance = 1e-5;
  int workers = 1;
  std::string out;                  // empty means environment or default
  int oracle_N = 400;
  std::optional<double> oracle_X;   // empty means d + R + 3
  std::string M_grid = "30:10:60";
  SimdChoice simd = SimdChoice::automatic;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Keys in serialization order.
const std::vector<std::string>& config_keys();

/// Sets one key from its textual value; throws ConfigError naming the key.
void set_value(RunConfig& cfg, std::string_view key, std::string_view value);

/// Textual value of one key, as written by serialize().
std::string get_value(const RunConfig& cfg, std::string_view key);

/// Parses "key = value" lines; '#' starts a comment, blank lines are
/// ignored. Errors name the source, line and key.
RunConfig parse_config(std::string_view text, std::string_view source = "config");
RunConfig load_config(const std::string& path);

/// One "key = value" line per key in config_keys() order. parse_config of
/// the result reproduces the config, and re-serializing is byte-identical.
std::string serialize(const RunConfig& cfg);

/// Range and consistency checks across keys (throws ConfigError).
void validate(const RunConfig& cfg);

/// Output directory: explicit setting, else the environment, else default.
std::string resolve_out_dir(const RunConfig& cfg);

SolverOptions solver_options(const RunConfig& cfg);

/// Basis for a run whose widest well edge is outer_edge.
BasisSpec basis_for(const RunConfig& cfg, double outer_edge);

GridSpec oracle_grid(const RunConfig& cfg);

/// Applies the simd choice to kernel dispatch.
void apply_simd(const RunConfig& cfg);

std::string_view to_string(SimdChoice s);

}  // namespace dotent
