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

#include "symlife/cli.h"

#include <glob.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "symlife/canonical.h"
#include "symlife/generator.h"
#include "symlife/io.h"
#include "symlife/solver.h"
#include "symlife/symmetry.h"

namespace symlife {

using nlohmann::json;

namespace {

enum class LogLevel { kQuiet, kInfo, kDebug };

class Logger {
 public:
  Logger(std::ostream& sink, LogLevel level) : sink_(sink), level_(level) {}

  void Info(const std::string& msg) const {
    if (level_ >= LogLevel::kInfo) sink_ << "[info] " << msg << "\n";
  }
  void Debug(const std::string& msg) const {
    if (level_ >= LogLevel::kDebug) sink_ << "[debug] " << msg << "\n";
  }

 private:
  std::ostream& sink_;
  LogLevel level_;
};

LogLevel LevelFromEnv() {
  const char* v = std::getenv("SYMLIFE_LOG");
  if (v == nullptr) return LogLevel::kInfo;
  const std::string s = v;
  if (s == "quiet") return LogLevel::kQuiet;
  if (s == "debug") return LogLevel::kDebug;
  return LogLevel::kInfo;
}

// Raised when an artifact cannot be written.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string Human(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json PointJson(Point p) { return json::array({p.x, p.y}); }

std::vector<int> OneBased(const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int v : nodes) out.push_back(v + 1);
  return out;
}

json InvarianceJson(const InvarianceReport& r) {
  return {{"max_violation", r.max_violation},
          {"is_invariant", r.is_invariant},
          {"tolerance", r.tolerance}};
}

json GroupJson(const SymmetryGroup& g) {
  return {{"kind", KindName(g.kind)},
          {"fold", g.fold},
          {"order", g.order()},
          {"center", PointJson(g.center)},
          {"frame_angle", g.frame_angle}};
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

void WriteArtifact(const std::filesystem::path& dir, const std::string& name,
                   const std::string& text) {
  try {
    std::filesystem::create_directories(dir);
    WriteTextFile(dir / name, text);
  } catch (const std::exception& e) {
    throw IoFailure(e.what());
  }
}

std::filesystem::path ParentOf(const std::string& file) {
  std::filesystem::path p = std::filesystem::path(file).parent_path();
  return p.empty() ? std::filesystem::path(".") : p;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return kExitUsage;
    case ErrorCode::kParse: return kExitParse;
    case ErrorCode::kValidation: return kExitValidation;
    case ErrorCode::kInfeasible: return kExitInfeasible;
    case ErrorCode::kPrecondition: return kExitPrecondition;
    case ErrorCode::kNumerical: return kExitNumerical;
  }
  return kExitUsage;
}

json DetectReport(const NetworkInstance& instance) {
  RequireValid(instance);
  const SymmetryGroup group = DetectSymmetryGroup(instance);
  const OrbitPartition partition = ComputeOrbits(group, instance);
  json orbits = json::array();
  for (int o = 0; o < partition.size(); ++o) {
    const std::vector<int>& members = partition.orbits[o];
    orbits.push_back(
        {{"index", o + 1},
         {"size", static_cast<int>(members.size())},
         {"kind", instance.IsCollector(members.front()) ? "collector" : "sensor"},
         {"stabilizer_order", StabilizerOrder(group, members.front())},
         {"nodes", OneBased(members)}});
  }
  json report;
  report["group"] = GroupJson(group);
  report["orbits"] = orbits;
  report["collectors"] = instance.num_collectors();
  report["sensors"] = instance.num_sensors();
  report["tolerances"] = {{"geometry", group.tolerance}};
  return report;
}

json SolveReport(const NetworkInstance& instance, const SolveRequest& request,
                 FlowMatrix* flow) {
  if (request.e0 && !(std::isfinite(*request.e0) && *request.e0 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "--e0 must be a positive number");
  }
  const EnergyMatrix energy = BuildEnergyMatrix(instance);
  const Solution optimum = SolveMaxLifetime(instance, energy);
  const SymmetryGroup group = DetectSymmetryGroup(instance);

  Solution reported = optimum;
  if (request.canonicalize) {
    const OrbitPartition partition = ComputeOrbits(group, instance);
    reported = Evaluate(Canonicalize(optimum.flow, group, partition, instance),
                        energy, instance);
    reported.stats = optimum.stats;
  }

  json report;
  report["group"] = GroupJson(group);
  report["objective"] = reported.objective;
  report["optimum_objective"] = optimum.objective;
  report["canonicalized"] = request.canonicalize;
  json energies = json::array();
  for (int s = 0; s < instance.num_sensors(); ++s) {
    energies.push_back(reported.sensor_energies[instance.num_collectors() + s]);
  }
  report["sensor_energies"] = energies;
  report["collector_intake"] = reported.collector_intake;
  report["max_residual"] = MaxResidual(reported.flow, instance);
  report["invariance"] = {
      {"optimum", InvarianceJson(CheckInvariance(optimum.flow, group,
                                                 kInvarianceTolerance))},
      {"reported", InvarianceJson(CheckInvariance(reported.flow, group,
                                                  kInvarianceTolerance))}};
  report["stats"] = {{"flow_variables", optimum.stats.flow_variables},
                     {"rows", optimum.stats.rows},
                     {"iterations", optimum.stats.iterations}};
  if (request.e0) {
    const auto cycles = LifetimeCycles(*request.e0, reported);
    report["lifetime"] = {{"e0", *request.e0},
                          {"cycles", cycles ? json(*cycles) : json(nullptr)}};
  }
  report["tolerances"] = {{"feasibility", FeasibilityTolerance(instance)},
                          {"invariance", kInvarianceTolerance},
                          {"geometry", group.tolerance}};
  if (flow != nullptr) *flow = reported.flow;
  return report;
}

json VerifyReport(const NetworkInstance& instance, const VerifyOptions& options) {
  RequireValid(instance);
  const EnergyMatrix energy = BuildEnergyMatrix(instance);
  const SymmetryGroup group = DetectSymmetryGroup(instance);
  const ReductionReport r = VerifyReduction(instance, energy, group, options);
  json report;
  report["group"] = GroupJson(group);
  report["reduction"] = {
      {"kind", KindName(r.kind)},
      {"fold", r.fold},
      {"order", r.group_order},
      {"rotation_only", options.rotation_only},
      {"region_nodes", r.region_nodes},
      {"border_collectors", r.border_collectors},
      {"center_collectors", r.center_collectors},
      {"reduced_sensors", r.reduced_sensors},
      {"reduced_collectors", r.reduced_collectors},
      {"flow_variables_full", r.flow_variables_full},
      {"flow_variables_reduced", r.flow_variables_reduced}};
  report["t_full"] = r.t_full;
  report["t_reduced"] = r.t_reduced;
  report["t_lifted"] = r.t_lifted;
  report["t_canonical"] = r.t_canonical;
  report["gap"] = r.gap;
  report["canonical_gap"] = r.canonical_gap;
  report["lifted_residual"] = r.lifted_residual;
  report["invariance"] = InvarianceJson(r.lifted_invariance);
  report["audit"] = {
      {"mirror_crossings", r.audit.mirror_crossings},
      {"nearest_collector_violations", r.audit.nearest_collector_violations},
      {"orbit_nearest_violations", r.audit.orbit_nearest_violations},
      {"locality_violations", r.audit.locality_violations},
      {"containment_violations", r.audit.containment_violations},
      {"intra_orbit_flow", r.audit.intra_orbit_flow},
      {"passed", r.audit.Passed()}};
  report["passed"] = r.passed;
  report["tolerances"] = {{"gap", options.tolerance},
                          {"feasibility", FeasibilityTolerance(instance)},
                          {"invariance", kInvarianceTolerance},
                          {"geometry", group.tolerance}};
  report["seconds_full"] = r.seconds_full;
  report["seconds_reduced"] = r.seconds_reduced;
  return report;
}

namespace {

struct SweepTask {
  std::string source;
  std::function<NetworkInstance()> load;
};

struct SweepRow {
  std::string source;
  bool solved = false;
  std::string status;
  std::string error;
  std::string kind;
  int fold = 0;
  int order = 0;
  int sensors = 0;
  int collectors = 0;
  int orbits = 0;
  int vars_full = 0;
  int vars_reduced = 0;
  double t_full = 0.0;
  double t_reduced = 0.0;
  double t_lifted = 0.0;
  double gap = 0.0;
  bool audit_passed = false;
  double seconds_full = 0.0;
  double seconds_reduced = 0.0;
};

SweepTask SpecTask(std::string source, json spec_doc) {
  return {std::move(source), [doc = std::move(spec_doc)] {
            return Generate(GeneratorSpecFromJson(doc));
          }};
}

std::vector<SweepTask> PlanSweep(const json& config,
                                 const std::filesystem::path& base_dir) {
  if (!config.is_object()) {
    throw Error(ErrorCode::kParse, "sweep config must be a JSON object");
  }
  std::vector<SweepTask> tasks;
  if (config.contains("instances")) {
    const json& list = config.at("instances");
    if (!list.is_array()) throw Error(ErrorCode::kParse, "\"instances\" must be an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      tasks.push_back(SpecTask("instances[" + std::to_string(k) + "]", list[k]));
    }
  }
  if (config.contains("files")) {
    const json& list = config.at("files");
    if (!list.is_array()) throw Error(ErrorCode::kParse, "\"files\" must be an array");
    for (const json& pattern_json : list) {
      if (!pattern_json.is_string()) {
        throw Error(ErrorCode::kParse, "\"files\" entries must be strings");
      }
      const std::string pattern = pattern_json.get<std::string>();
      std::filesystem::path full = pattern;
      if (full.is_relative()) full = base_dir / full;
      glob_t matches{};
      const int rc = ::glob(full.c_str(), 0, nullptr, &matches);
      if (rc != 0 || matches.gl_pathc == 0) {
        tasks.push_back({pattern, [pattern]() -> NetworkInstance {
                           throw Error(ErrorCode::kParse,
                                       "no files match \"" + pattern + "\"");
                         }});
      } else {
        for (std::size_t k = 0; k < matches.gl_pathc; ++k) {
          const std::filesystem::path path = matches.gl_pathv[k];
          const std::string label =
              path.lexically_relative(base_dir).generic_string();
          tasks.push_back({label, [path] { return ReadNetworkFile(path); }});
        }
      }
      globfree(&matches);
    }
  }
  if (config.contains("grid")) {
    const json& grid = config.at("grid");
    if (!grid.is_object()) throw Error(ErrorCode::kParse, "\"grid\" must be an object");
    const json kinds = grid.value("kinds", json::array({"cyclic"}));
    const json folds = grid.value("M", json::array());
    const json seeds = grid.value("seeds", json::array({0}));
    if (!kinds.is_array() || !folds.is_array() || !seeds.is_array()) {
      throw Error(ErrorCode::kParse, "grid kinds, M and seeds must be arrays");
    }
    for (const json& kind : kinds) {
      for (const json& fold : folds) {
        for (const json& seed : seeds) {
          json spec = {{"kind", kind}, {"M", fold}, {"rng_seed", seed},
                       {"random", grid.value("random", json::object())}};
          if (grid.contains("center_collector")) {
            spec["center_collector"] = grid.at("center_collector");
          }
          if (grid.contains("energy_model")) {
            spec["energy_model"] = grid.at("energy_model");
          }
          std::string label = "grid:" + kind.dump() + ":M=" + fold.dump() +
                              ":seed=" + seed.dump();
          label.erase(std::remove(label.begin(), label.end(), '"'), label.end());
          tasks.push_back(SpecTask(label, spec));
        }
      }
    }
  }
  return tasks;
}

SweepRow RunTask(const SweepTask& task, double tolerance) {
  SweepRow row;
  row.source = task.source;
  try {
    const NetworkInstance instance = task.load();
    RequireValid(instance);
    row.sensors = instance.num_sensors();
    row.collectors = instance.num_collectors();
    const EnergyMatrix energy = BuildEnergyMatrix(instance);
    const SymmetryGroup group = DetectSymmetryGroup(instance);
    row.orbits = ComputeOrbits(group, instance).size();
    VerifyOptions options;
    options.tolerance = tolerance;
    const ReductionReport r = VerifyReduction(instance, energy, group, options);
    row.solved = true;
    row.kind = KindName(r.kind);
    row.fold = r.fold;
    row.order = r.group_order;
    row.vars_full = r.flow_variables_full;
    row.vars_reduced = r.flow_variables_reduced;
    row.t_full = r.t_full;
    row.t_reduced = r.t_reduced;
    row.t_lifted = r.t_lifted;
    row.gap = r.gap;
    row.audit_passed = r.audit.Passed();
    row.seconds_full = r.seconds_full;
    row.seconds_reduced = r.seconds_reduced;
    row.status = r.passed ? "ok" : "fail";
  } catch (const std::exception& e) {
    row.status = "error";
    row.error = e.what();
  }
  return row;
}

}  // namespace

SweepResult RunSweep(const json& config, const std::filesystem::path& base_dir,
                     double tolerance, int jobs) {
  const std::vector<SweepTask> tasks = PlanSweep(config, base_dir);
  std::vector<SweepRow> rows(tasks.size());
  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      rows[k] = RunTask(tasks[k], tolerance);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  SweepResult result;
  std::ostringstream csv;
  csv << "index,source,kind,M,order,sensors,collectors,orbits,vars_full,"
         "vars_reduced,var_ratio,t_full,t_reduced,t_lifted,gap,audit,status,"
         "error,seconds_full,seconds_reduced\n";
  struct FoldStats {
    int instances = 0;
    int failures = 0;
    double max_gap = 0.0;
    double sum_gap = 0.0;
    double sum_ratio = 0.0;
    double sum_full = 0.0;
    double sum_reduced = 0.0;
  };
  std::map<std::pair<std::string, int>, FoldStats> folds;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const SweepRow& r = rows[k];
    csv << k + 1 << "," << CsvField(r.source) << ",";
    if (r.solved) {
      const double ratio = static_cast<double>(r.vars_reduced) / r.vars_full;
      csv << r.kind << "," << r.fold << "," << r.order << "," << r.sensors << ","
          << r.collectors << "," << r.orbits << "," << r.vars_full << ","
          << r.vars_reduced << "," << FormatDouble(ratio) << ","
          << FormatDouble(r.t_full) << "," << FormatDouble(r.t_reduced) << ","
          << FormatDouble(r.t_lifted) << "," << FormatDouble(r.gap) << ","
          << (r.audit_passed ? "pass" : "fail") << "," << r.status << ",,"
          << FormatDouble(r.seconds_full) << ","
          << FormatDouble(r.seconds_reduced) << "\n";
      FoldStats& f = folds[{r.kind, r.fold}];
      ++f.instances;
      if (r.status != "ok") ++f.failures;
      f.max_gap = std::max(f.max_gap, r.gap);
      f.sum_gap += r.gap;
      f.sum_ratio += ratio;
      f.sum_full += r.seconds_full;
      f.sum_reduced += r.seconds_reduced;
    } else {
      csv << ",,,,,,,,,,,,,," << r.status << "," << CsvField(r.error) << ",,\n";
    }
    if (r.status != "ok") ++result.failures;
  }
  result.rows = static_cast<int>(rows.size());
  result.rows_csv = csv.str();

  std::ostringstream fold_csv;
  fold_csv << "kind,M,instances,failures,max_gap,mean_gap,mean_var_ratio,"
              "mean_seconds_full,mean_seconds_reduced\n";
  for (const auto& [key, f] : folds) {
    const double n = f.instances;
    fold_csv << key.first << "," << key.second << "," << f.instances << ","
             << f.failures << "," << FormatDouble(f.max_gap) << ","
             << FormatDouble(f.sum_gap / n) << ","
             << FormatDouble(f.sum_ratio / n) << ","
             << FormatDouble(f.sum_full / n) << ","
             << FormatDouble(f.sum_reduced / n) << "\n";
  }
  result.fold_csv = fold_csv.str();
  return result;
}

namespace {

struct Options {
  std::string input;
  std::string out_dir;
  double tol = 1e-6;
  std::optional<double> e0;
  bool canonicalize = false;
  bool rotation_only = false;
  std::optional<std::uint64_t> seed;
  int jobs = 0;
};

// The argument list without --out and its value, so reports written to
// different directories stay comparable.
json CommandEcho(const std::vector<std::string>& args) {
  json echo = json::array();
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--out") {
      ++k;
      continue;
    }
    if (args[k].rfind("--out=", 0) == 0) continue;
    echo.push_back(args[k]);
  }
  return echo;
}

void Finish(json& report, const std::vector<std::string>& args,
            std::chrono::steady_clock::time_point start) {
  report["command"] = CommandEcho(args);
  report["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int CmdDetect(const Options& o, const std::vector<std::string>& args,
              std::ostream& out, const Logger& log) {
  const auto start = std::chrono::steady_clock::now();
  const NetworkInstance instance = ReadNetworkFile(o.input);
  log.Debug("read " + std::to_string(instance.num_nodes()) + " nodes");
  json report = DetectReport(instance);
  report["digest"] = InstanceDigest(instance);
  const json& g = report["group"];
  out << "group: " << g["kind"].get<std::string>() << ", order "
      << g["order"].get<int>() << "\n";
  out << "center: (" << Human(g["center"][0].get<double>()) << ", "
      << Human(g["center"][1].get<double>()) << ")\n";
  out << "orbit  size  kind       stabilizer\n";
  for (const json& orbit : report["orbits"]) {
    out << std::left << std::setw(7) << orbit["index"].get<int>() << std::setw(6)
        << orbit["size"].get<int>() << std::setw(11)
        << orbit["kind"].get<std::string>() << orbit["stabilizer_order"].get<int>()
        << "\n";
  }
  if (!o.out_dir.empty()) {
    Finish(report, args, start);
    WriteArtifact(o.out_dir, "report.json", report.dump(2) + "\n");
  }
  return kExitOk;
}

int CmdSolve(const Options& o, const std::vector<std::string>& args,
             std::ostream& out, const Logger& log) {
  const auto start = std::chrono::steady_clock::now();
  const NetworkInstance instance = ReadNetworkFile(o.input);
  FlowMatrix flow;
  json report = SolveReport(instance, {o.e0, o.canonicalize}, &flow);
  report["digest"] = InstanceDigest(instance);
  log.Info("solved in " + std::to_string(report["stats"]["iterations"].get<int>()) +
           " pivots");
  out << "group: " << report["group"]["kind"].get<std::string>() << ", order "
      << report["group"]["order"].get<int>() << "\n";
  out << "objective: " << Human(report["objective"].get<double>()) << "\n";
  if (report.contains("lifetime")) {
    const json& cycles = report["lifetime"]["cycles"];
    out << "cycles: "
        << (cycles.is_null() ? std::string("unbounded")
                             : std::to_string(cycles.get<std::int64_t>()))
        << "\n";
  }
  if (!o.out_dir.empty()) {
    Finish(report, args, start);
    WriteArtifact(o.out_dir, "report.json", report.dump(2) + "\n");
    WriteArtifact(o.out_dir, "flow.csv", FlowToCsv(flow));
  }
  return kExitOk;
}

int CmdVerify(const Options& o, const std::vector<std::string>& args,
              std::ostream& out, const Logger& log) {
  const auto start = std::chrono::steady_clock::now();
  const NetworkInstance instance = ReadNetworkFile(o.input);
  VerifyOptions options;
  options.tolerance = o.tol;
  options.rotation_only = o.rotation_only;
  json report = VerifyReport(instance, options);
  report["digest"] = InstanceDigest(instance);
  const json& red = report["reduction"];
  const json& audit = report["audit"];
  log.Debug("reduced to " + std::to_string(red["reduced_sensors"].get<int>()) +
            " sensors");
  out << "group: " << red["kind"].get<std::string>() << ", order "
      << red["order"].get<int>() << "\n";
  out << "flow variables: " << red["flow_variables_full"].get<int>() << " full, "
      << red["flow_variables_reduced"].get<int>() << " reduced\n";
  out << "t_full: " << Human(report["t_full"].get<double>())
      << "  t_lifted: " << Human(report["t_lifted"].get<double>())
      << "  gap: " << Human(report["gap"].get<double>()) << "\n";
  out << "audit: mirror crossings " << audit["mirror_crossings"].get<int>()
      << ", orbit-nearest " << audit["orbit_nearest_violations"].get<int>()
      << ", nearest collector " << audit["nearest_collector_violations"].get<int>()
      << ", locality " << audit["locality_violations"].get<int>()
      << ", containment " << audit["containment_violations"].get<int>()
      << ", intra-orbit flow " << Human(audit["intra_orbit_flow"].get<double>())
      << "\n";
  out << "invariance: " << Human(report["invariance"]["max_violation"].get<double>())
      << "\n";
  const bool passed = report["passed"].get<bool>();
  out << "verify: " << (passed ? "pass" : "FAIL") << "\n";
  if (!o.out_dir.empty()) {
    Finish(report, args, start);
    WriteArtifact(o.out_dir, "report.json", report.dump(2) + "\n");
  }
  return passed ? kExitOk : kExitVerifyFailed;
}

int CmdGenerate(const Options& o, std::ostream& out, const Logger& log) {
  GeneratorSpec spec =
      GeneratorSpecFromJson(ParseJson(ReadTextFile(o.input), o.input));
  if (o.seed) spec.rng_seed = *o.seed;
  const NetworkInstance instance = Generate(spec);
  log.Info("generated " + std::to_string(instance.num_collectors()) +
           " collectors and " + std::to_string(instance.num_sensors()) + " sensors");
  const std::string text = NetworkToJson(instance).dump(2) + "\n";
  if (o.out_dir.empty()) {
    out << text;
  } else {
    WriteArtifact(o.out_dir, "network.json", text);
    out << "wrote " << (std::filesystem::path(o.out_dir) / "network.json").string()
        << "\n";
  }
  return kExitOk;
}

int CmdSweep(const Options& o, std::ostream& out, const Logger& log) {
  const json config = ParseJson(ReadTextFile(o.input), o.input);
  int jobs = o.jobs;
  if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  log.Debug("sweep with " + std::to_string(jobs) + " jobs");
  const SweepResult result = RunSweep(config, ParentOf(o.input), o.tol, jobs);
  if (!o.out_dir.empty()) {
    WriteArtifact(o.out_dir, "sweep.csv", result.rows_csv);
    WriteArtifact(o.out_dir, "gap_by_fold.csv", result.fold_csv);
  } else {
    out << result.rows_csv;
  }
  out << "sweep: " << result.rows << " rows, " << result.failures << " failed\n";
  return result.failures == 0 ? kExitOk : kExitSweepPartial;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  const Logger log(err, LevelFromEnv());
  CLI::App app{"Maximum-lifetime routing with symmetry reduction", "symlife"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* cmd, const char* input_help) {
    cmd->add_option("input", o.input, input_help)->required();
    cmd->add_option("--out", o.out_dir, "Directory for report and artifacts");
  };
  CLI::App* detect = app.add_subcommand("detect", "Detect the symmetry group");
  common(detect, "Network JSON file");
  CLI::App* solve = app.add_subcommand("solve", "Solve the min-max routing problem");
  common(solve, "Network JSON file");
  solve->add_option("--e0", o.e0, "Initial battery energy; prints lifetime cycles");
  solve->add_flag("--canonicalize", o.canonicalize,
                  "Symmetrize, drop intra-orbit flow and cancel two-cycles");
  CLI::App* verify = app.add_subcommand("verify", "Compare full and reduced solves");
  common(verify, "Network JSON file");
  verify->add_option("--tol", o.tol, "Relative gap tolerance")->capture_default_str();
  verify->add_flag("--rotation-only", o.rotation_only,
                   "Reduce over the rotation subgroup only");
  CLI::App* generate = app.add_subcommand("generate", "Generate a symmetric network");
  common(generate, "Generator spec JSON file");
  generate->add_option("--seed", o.seed, "Override the spec's rng_seed");
  CLI::App* sweep = app.add_subcommand("sweep", "Run a reduction sweep");
  common(sweep, "Sweep config JSON file");
  sweep->add_option("--tol", o.tol, "Relative gap tolerance")->capture_default_str();
  sweep->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!(o.tol > 0.0)) {
    err << "error: --tol must be positive\n";
    return kExitUsage;
  }

  try {
    if (detect->parsed()) return CmdDetect(o, args, out, log);
    if (solve->parsed()) return CmdSolve(o, args, out, log);
    if (verify->parsed()) return CmdVerify(o, args, out, log);
    if (generate->parsed()) return CmdGenerate(o, out, log);
    if (sweep->parsed()) return CmdSweep(o, out, log);
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace symlife
