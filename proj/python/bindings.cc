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

// Python bindings. Documents cross the boundary as JSON text; the pure
// Python wrapper in symlife/__init__.py turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symlife/cli.h"
#include "symlife/error.h"
#include "symlife/generator.h"
#include "symlife/io.h"

namespace py = pybind11;

namespace symlife {
namespace {

NetworkInstance Network(const std::string& text) {
  return NetworkFromJson(ParseJson(text, "<network>"));
}

std::string Detect(const std::string& network) {
  const NetworkInstance instance = Network(network);
  nlohmann::json report = DetectReport(instance);
  report["digest"] = InstanceDigest(instance);
  return report.dump();
}

std::string Solve(const std::string& network, std::optional<double> e0,
                  bool canonicalize) {
  const NetworkInstance instance = Network(network);
  FlowMatrix flow;
  nlohmann::json report = SolveReport(instance, {e0, canonicalize}, &flow);
  report["digest"] = InstanceDigest(instance);
  nlohmann::json triplets = nlohmann::json::array();
  for (int i = 0; i < flow.size(); ++i) {
    for (int j = 0; j < flow.size(); ++j) {
      if (flow(i, j) > 0.0) triplets.push_back({i + 1, j + 1, flow(i, j)});
    }
  }
  report["flow"] = triplets;
  return report.dump();
}

std::string Verify(const std::string& network, double tolerance,
                   bool rotation_only) {
  VerifyOptions options;
  options.tolerance = tolerance;
  options.rotation_only = rotation_only;
  return VerifyReport(Network(network), options).dump();
}

std::string GenerateNetwork(const std::string& spec_text,
                            std::optional<std::uint64_t> seed) {
  GeneratorSpec spec = GeneratorSpecFromJson(ParseJson(spec_text, "<spec>"));
  if (seed) spec.rng_seed = *seed;
  return NetworkToJson(Generate(spec)).dump();
}

py::tuple Sweep(const std::string& config, const std::string& base_dir,
                double tolerance, int jobs) {
  SweepResult r;
  {
    py::gil_scoped_release release;
    r = RunSweep(ParseJson(config, "<config>"), base_dir, tolerance, jobs);
  }
  return py::make_tuple(r.rows_csv, r.fold_csv, r.failures);
}

py::tuple Cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace symlife

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximum-lifetime routing with symmetry reduction (native core)";
  py::register_exception<symlife::Error>(m, "SymlifeError", PyExc_ValueError);
  m.def("detect", &symlife::Detect, py::arg("network"));
  m.def("solve", &symlife::Solve, py::arg("network"), py::arg("e0") = py::none(),
        py::arg("canonicalize") = false);
  m.def("verify", &symlife::Verify, py::arg("network"), py::arg("tol") = 1e-6,
        py::arg("rotation_only") = false);
  m.def("generate", &symlife::GenerateNetwork, py::arg("spec"),
        py::arg("seed") = py::none());
  m.def("sweep", &symlife::Sweep, py::arg("config"), py::arg("base_dir") = ".",
        py::arg("tol") = 1e-6, py::arg("jobs") = 1);
  m.def("run_cli", &symlife::Cli, py::arg("args"));
}
