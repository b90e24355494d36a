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

#include <CLI11.hpp>

#include "fourier_cli/run.hpp"

int main(int argc, char** argv) {
  using fourier::cli::RunConfig;
  RunConfig cfg;
  std::string command;
  std::int64_t n = 0;

  CLI::App app{"Classify operators on finite cyclic groups against their Fourier canonical forms"};
  app.add_option("command", command,
                 "classify-conv | classify-exchange | classify-intertwiner | classify-torus | "
                 "verify-twisted | check-axioms | construct")
      ->required();
  app.add_option("--input", cfg.input, "input JSON document");
  app.add_option("--output", cfg.output, "report path (default stdout)");
  auto* n_opt = app.add_option("--n", n, "expected group order");
  app.add_option("--tol", cfg.tol, "tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
  app.add_flag("--unitary", cfg.unitary, "scale the operator by 1/sqrt(n) before checking");
  app.add_option("--mode", cfg.mode, "basis | sampled")->capture_default_str();
  app.add_option("--samples", cfg.samples, "sampled inputs per check")->capture_default_str();
  app.add_option("--grid-S", cfg.grid_s, "samples per axis")->capture_default_str();
  app.add_option("--grid-L", cfg.grid_l, "window half width")->capture_default_str();
  app.add_option("--axiom", cfg.axiom, "conv | exchange | involution | intertwining")
      ->capture_default_str();
  app.add_flag("--fourier", cfg.fourier, "classify F^-1 T (maps swapping the products)");
  app.add_option("--max-error", cfg.max_error, "verify-twisted pass threshold")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const auto cmd = fourier::cli::parse_command(command);
  if (!cmd) {
    std::cerr << "unknown command '" << command << "'\n";
    return 2;
  }
  cfg.command = *cmd;
  if (*n_opt) cfg.n = n;
  return fourier::cli::run(cfg);
}
