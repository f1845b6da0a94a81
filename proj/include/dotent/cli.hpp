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

namespace dotent {

/// Runs the command-line interface: solve | sweep | oracle | converge.
/// Returns the process exit code (0 ok, 2 config, 3 numerical,
/// 4 coverage/validation).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

/// Pins BLAS to one thread so results do not depend on the thread count.
void pin_blas_threads();

}  // namespace dotent
