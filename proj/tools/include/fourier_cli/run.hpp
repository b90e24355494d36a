// Copyright 2026 The Fourier Characterization Authors.
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

#include <cstdint>
#include <optional>
#include <string>

#include "fourier/json_io.hpp"

namespace fourier::cli {

enum class Command {
  kClassifyConv,
  kClassifyExchange,
  kClassifyIntertwiner,
  kClassifyTorus,
  kVerifyTwisted,
  kCheckAxioms,
  kConstruct,
};

const char* to_string(Command c);
std::optional<Command> parse_command(const std::string& name);

struct RunConfig {
  Command command = Command::kClassifyConv;
  std::string input;   // empty: none
  std::string output;  // empty: stdout
  std::optional<std::int64_t> n;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  bool unitary = false;
  std::string mode = "basis";  // basis | sampled
  int samples = 64;
  std::int64_t grid_s = 64;
  double grid_l = 8.0;
  // check-axioms: conv | exchange | involution | intertwining
  std::string axiom = "conv";
  // classify-exchange: classify F^{-1} T instead of T
  bool fourier = false;
  // verify-twisted: largest relative error that still passes
  double max_error = 5e-2;
};

io::Json to_json(const RunConfig& c);

struct RunResult {
  int exit_code = 0;  // 0 passed/classified, 1 rejected, 2 input error
  io::Json report;
  std::string summary;  // one human-readable line
};

/// Executes one command without touching the output path.
RunResult execute(const RunConfig& config);

/// execute, then writes the report to config.output (or stdout) and the
/// summary to stderr. Returns the exit code.
int run(const RunConfig& config);

}  // namespace fourier::cli
