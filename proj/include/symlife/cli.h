// Copyright 2026 The symlife Authors
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

// Command-line front end and the JSON report builders it shares with the
// Python bindings.
//
//   symlife detect   <network.json>
//   symlife solve    <network.json> [--e0 E] [--canonicalize]
//   symlife verify   <network.json> [--tol T] [--rotation-only]
//   symlife generate <spec.json> [--seed S]
//   symlife sweep    <config.json> [--tol T] [--jobs J]
//
// Every command accepts --out <dir>; artifacts are written there and a short
// summary goes to stdout. Log verbosity comes from SYMLIFE_LOG (quiet, info,
// debug).

#ifndef SYMLIFE_CLI_H_
#define SYMLIFE_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symlife/error.h"
#include "symlife/model.h"
#include "symlife/reduction.h"

namespace symlife {

enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitInfeasible = 4,
  kExitPrecondition = 5,
  kExitNumerical = 6,
  kExitVerifyFailed = 7,
  kExitSweepPartial = 8,
  kExitIo = 9,
};

int ExitCodeFor(ErrorCode code);

// Group kind, order, center, orbit table and stabilizer orders.
nlohmann::json DetectReport(const NetworkInstance& instance);

struct SolveRequest {
  std::optional<double> e0;
  bool canonicalize = false;
};

// Objective, energies, intake, invariance under the detected group and,
// with e0, lifetime cycles. The routed flow is stored in `flow` if given.
nlohmann::json SolveReport(const NetworkInstance& instance,
                           const SolveRequest& request,
                           FlowMatrix* flow = nullptr);

// Full-versus-reduced comparison with audits. Throws like VerifyReduction.
nlohmann::json VerifyReport(const NetworkInstance& instance,
                            const VerifyOptions& options);

struct SweepResult {
  std::string rows_csv;  // one row per instance
  std::string fold_csv;  // aggregated by kind and M, for plotting
  int rows = 0;
  int failures = 0;      // rows whose status is not "ok"
};

// Config keys (all optional): "instances" (generator specs), "files" (globs
// relative to `base_dir`), "grid" {"kinds", "M", "seeds", "random",
// "center_collector", "energy_model"}. Rows follow config order regardless
// of `jobs`.
SweepResult RunSweep(const nlohmann::json& config,
                     const std::filesystem::path& base_dir, double tolerance,
                     int jobs);

// Entry point; `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace symlife

#endif  // SYMLIFE_CLI_H_
