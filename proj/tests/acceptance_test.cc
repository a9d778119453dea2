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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.h"
#include "support/oracle.h"
#include "symlife/canonical.h"
#include "symlife/cli.h"
#include "symlife/generator.h"
#include "symlife/io.h"
#include "symlife/reduction.h"
#include "symlife/solver.h"
#include "symlife/symmetry.h"

namespace symlife {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using testing::Uniform;
using testing::UniformInt;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double Rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

std::string Fmt(const char* format, double a = 0, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Generated symmetric instances shared by criteria 3, 4, 5 and 8.
std::vector<NetworkInstance> SymmetricSuite() {
  std::vector<NetworkInstance> out;
  for (GroupKind kind : {GroupKind::kCyclic, GroupKind::kDihedral}) {
    for (int fold = 2; fold <= 8; ++fold) {
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        out.push_back(Generate(testing::RandomSymmetricSpec(kind, fold, seed)));
      }
    }
  }
  return out;
}

Outcome ChainOracle() {
  const auto start = Clock::now();
  const NetworkInstance net = testing::Chain();
  const Solution s = SolveMaxLifetime(net, BuildEnergyMatrix(net));
  const double seconds = Seconds(start);
  // s2 relays a share x through s1: 1 + x = 4 - 3x.
  const double x = 3.0 / 4.0;
  const double balance = 1.0 + x;
  const double lp = testing::BruteForceOptimum(net);
  const double grid = testing::ChainGridOptimum(1, 1, 4, 1, 1);
  const double err = std::abs(s.objective - 1.75);
  Outcome o;
  o.pass = err <= 1e-9 && std::abs(balance - 1.75) <= 1e-15 &&
           std::abs(lp - s.objective) <= 1e-9 &&
           std::abs(grid - s.objective) <= 1e-9 && seconds < 0.1;
  o.detail = Fmt("t*=%.17g, |t*-7/4|=%.2g, %.3g s", s.objective, err, seconds);
  return o;
}

Outcome BruteForceEquivalence() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20261018);
  const std::vector<EnergyModel> models = {
      {{{1, 2}}}, {{{1, 1}, {0.5, 3}}}, {{{1, 2}, {0.3, 0}}}, {{{2, 1.5}}}};
  int count = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = UniformInt(rng, 1, 4);
    const int k = UniformInt(rng, 1, std::min(3, 7 - n));
    const NetworkInstance net =
        testing::RandomInstance(rng, k, n, models[trial % models.size()]);
    const double want = testing::BruteForceOptimum(net);
    const double got = SolveMaxLifetime(net, BuildEnergyMatrix(net)).objective;
    worst = std::max(worst, Rel(got, want));
    ++count;
  }
  const double seconds = Seconds(start);
  Outcome o;
  o.pass = count >= 50 && worst <= 1e-6 && seconds < 60.0;
  o.detail = Fmt("%g instances, worst relative error %.2g, %.3g s", count, worst,
                 seconds);
  return o;
}

Outcome AveragingSuite(const std::vector<NetworkInstance>& suite) {
  std::mt19937_64 rng(31);
  double worst_residual = 0.0;
  double worst_invariance = 0.0;
  double worst_gap = 0.0;
  double worst_mix_gap = 0.0;
  double worst_mix_residual = 0.0;
  for (const NetworkInstance& net : suite) {
    const EnergyMatrix e = BuildEnergyMatrix(net);
    const SymmetryGroup g = DetectSymmetryGroup(net);
    const Solution opt = SolveMaxLifetime(net, e);
    const FlowMatrix s = Symmetrize(opt.flow, g);
    worst_residual = std::max(worst_residual, MaxResidual(s, net));
    worst_invariance =
        std::max(worst_invariance, CheckInvariance(s, g, 1e-12).max_violation);
    worst_gap = std::max(worst_gap, Rel(Evaluate(s, e, net).objective, opt.objective));

    std::vector<FlowMatrix> conjugates;
    for (const GroupElement& el : g.elements) {
      conjugates.push_back(ConjugateFlow(el, opt.flow));
    }
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> w(g.order());
      double total = 0.0;
      for (double& v : w) total += (v = Uniform(rng, 0, 1));
      FlowMatrix mix(net.num_nodes());
      for (int a = 0; a < g.order(); ++a) {
        for (int i = 0; i < mix.size(); ++i) {
          for (int j = 0; j < mix.size(); ++j) {
            mix(i, j) += w[a] / total * conjugates[a](i, j);
          }
        }
      }
      worst_mix_residual = std::max(worst_mix_residual, MaxResidual(mix, net));
      worst_mix_gap =
          std::max(worst_mix_gap, Rel(Evaluate(mix, e, net).objective, opt.objective));
    }
  }
  Outcome o;
  o.pass = suite.size() >= 100 && worst_residual <= 1e-9 &&
           worst_invariance <= 1e-12 && worst_gap <= 1e-9 &&
           worst_mix_residual <= 1e-9 && worst_mix_gap <= 1e-9;
  o.detail = Fmt("residual %.2g, invariance %.2g, objective gap %.2g", worst_residual,
                 worst_invariance, worst_gap) +
             Fmt("; weighted averages: residual %.2g, gap %.2g", worst_mix_residual,
                 worst_mix_gap) +
             Fmt(" (%g instances)", static_cast<double>(suite.size()));
  return o;
}

struct ReductionOutcomes {
  Outcome equivalence;
  Outcome audits{false, "reduction suite did not complete"};
};

ReductionOutcomes ReductionSuite(std::vector<NetworkInstance> suite) {
  suite.push_back(testing::Pinwheel());
  suite.push_back(Generate(testing::Dihedral4Spec()));
  double worst_gap = 0.0;
  double worst_ratio = 0.0;  // reduced vars * |G| / full vars
  int ratio_failures = 0;
  ReductionAudit total;
  int dihedral = 0;
  for (const NetworkInstance& net : suite) {
    const SymmetryGroup g = DetectSymmetryGroup(net);
    const ReductionReport r = VerifyReduction(net, BuildEnergyMatrix(net), g);
    worst_gap = std::max(worst_gap, r.gap);
    const double ratio = static_cast<double>(r.flow_variables_reduced) *
                         r.group_order / r.flow_variables_full;
    worst_ratio = std::max(worst_ratio, ratio);
    if (ratio > 1.0) ++ratio_failures;
    if (g.kind == GroupKind::kDihedral) ++dihedral;
    total.mirror_crossings += r.audit.mirror_crossings;
    total.nearest_collector_violations += r.audit.nearest_collector_violations;
    total.orbit_nearest_violations += r.audit.orbit_nearest_violations;
    total.locality_violations += r.audit.locality_violations;
    total.containment_violations += r.audit.containment_violations;
    total.intra_orbit_flow = std::max(total.intra_orbit_flow, r.audit.intra_orbit_flow);
  }
  ReductionOutcomes out;
  out.equivalence.pass = worst_gap <= 1e-6 && ratio_failures == 0;
  out.equivalence.detail =
      Fmt("worst gap %.2g, worst reduced/full variable ratio x |G| = %.3g over %g instances",
          worst_gap, worst_ratio, static_cast<double>(suite.size()));
  out.audits.pass = total.Passed();
  std::ostringstream d;
  d << "mirror crossings " << total.mirror_crossings << " (" << dihedral
    << " dihedral), intra-orbit flow " << total.intra_orbit_flow
    << ", orbit-nearest " << total.orbit_nearest_violations << ", nearest collector "
    << total.nearest_collector_violations << ", locality "
    << total.locality_violations << ", containment " << total.containment_violations;
  out.audits.detail = d.str();
  return out;
}

Outcome Covariance() {
  std::mt19937_64 rng(606);
  double worst_iso = 0.0;
  double worst_perm = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const NetworkInstance net =
        testing::RandomInstance(rng, UniformInt(rng, 1, 3), UniformInt(rng, 2, 8));
    const double t = SolveMaxLifetime(net, BuildEnergyMatrix(net)).objective;

    Isometry g = Isometry::Rotation(Uniform(rng, 0, kTwoPi),
                                    {Uniform(rng, -5, 5), Uniform(rng, -5, 5)});
    if (rng() % 2 == 0) g = g.Compose(Isometry::Reflection(Uniform(rng, 0, 3.14)));
    g = Isometry::Translation({Uniform(rng, -10, 10), Uniform(rng, -10, 10)}).Compose(g);
    const NetworkInstance moved = Transform(net, g);
    worst_iso = std::max(
        worst_iso, Rel(SolveMaxLifetime(moved, BuildEnergyMatrix(moved)).objective, t));

    Permutation perm(net.num_nodes());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.begin() + net.num_collectors(), rng);
    std::shuffle(perm.begin() + net.num_collectors(), perm.end(), rng);
    const NetworkInstance relabeled = Relabel(net, perm);
    worst_perm = std::max(
        worst_perm,
        Rel(SolveMaxLifetime(relabeled, BuildEnergyMatrix(relabeled)).objective, t));
  }
  Outcome o;
  o.pass = worst_iso <= 1e-9 && worst_perm <= 1e-9;
  o.detail = Fmt("50 instances, isometry %.2g, relabeling %.2g", worst_iso, worst_perm);
  return o;
}

std::string DropTrailingFields(const std::string& csv, int fields) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    for (int k = 0; k < fields; ++k) line = line.substr(0, line.rfind(','));
    out += line + "\n";
  }
  return out;
}

std::string DropWallTime(const std::string& report) {
  nlohmann::json doc = ParseJson(report, "report");
  doc.erase("wall_time_seconds");
  return doc.dump();
}

Outcome Determinism() {
  const fs::path data = SYMLIFE_DATA_DIR;
  const fs::path scratch = fs::temp_directory_path() / "symlife_acceptance";
  fs::remove_all(scratch);
  std::ostringstream sink;
  bool same = true;
  int artifacts = 0;
  for (const char* file : {"chain.json", "pinwheel.json", "dihedral4.json"}) {
    std::string reports[2];
    std::string flows[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = scratch / ("solve" + std::to_string(run));
      RunCli({"solve", (data / file).string(), "--e0", "10", "--canonicalize",
              "--out", out.string()},
             sink, sink);
      reports[run] = DropWallTime(ReadTextFile(out / "report.json"));
      flows[run] = ReadTextFile(out / "flow.csv");
    }
    same = same && reports[0] == reports[1] && flows[0] == flows[1];
    artifacts += 2;
  }
  std::string rows[2];
  std::string folds[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path out = scratch / ("sweep" + std::to_string(run));
    RunCli({"sweep", (data / "sweep_grid.json").string(), "--jobs",
            run == 0 ? "1" : "4", "--out", out.string()},
           sink, sink);
    rows[run] = DropTrailingFields(ReadTextFile(out / "sweep.csv"), 2);
    folds[run] = DropTrailingFields(ReadTextFile(out / "gap_by_fold.csv"), 2);
  }
  same = same && rows[0] == rows[1] && folds[0] == folds[1] &&
         std::count(rows[0].begin(), rows[0].end(), '\n') == 36;
  artifacts += 2;
  Outcome o;
  o.pass = same;
  o.detail = Fmt("%g artifacts compared across repeated runs (sweep with 1 and 4 jobs)",
                 artifacts);
  return o;
}

Outcome OrbitStabilizer(std::vector<NetworkInstance> suite) {
  suite.push_back(Generate(testing::Dihedral4Spec()));
  suite.push_back(testing::Pinwheel());
  suite.push_back(testing::AlignedSquares());
  suite.push_back(testing::SquareWithCenter());
  int nodes = 0;
  int failures = 0;
  for (const NetworkInstance& net : suite) {
    const SymmetryGroup g = DetectSymmetryGroup(net);
    const OrbitPartition p = ComputeOrbits(g, net);
    for (int v = 0; v < net.num_nodes(); ++v) {
      const int orbit = static_cast<int>(p.orbits[p.orbit_of[v]].size());
      if (orbit * StabilizerOrder(g, v) != g.order()) ++failures;
      ++nodes;
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = Fmt("%g nodes on %g instances, %g mismatches", nodes,
                 static_cast<double>(suite.size()), failures);
  return o;
}

}  // namespace
}  // namespace symlife

int main() {
  using namespace symlife;
  const std::vector<NetworkInstance> suite = SymmetricSuite();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
  ReductionOutcomes reduction;
  criteria.emplace_back("chain oracle", ChainOracle);
  criteria.emplace_back("brute-force equivalence", BruteForceEquivalence);
  criteria.emplace_back("group averaging", [&] { return AveragingSuite(suite); });
  criteria.emplace_back("reduction equivalence", [&] {
    reduction = ReductionSuite(suite);
    return reduction.equivalence;
  });
  criteria.emplace_back("structural audits", [&] { return reduction.audits; });
  criteria.emplace_back("isometry and relabeling covariance", Covariance);
  criteria.emplace_back("determinism", Determinism);
  criteria.emplace_back("orbit-stabilizer identity",
                        [&] { return OrbitStabilizer(suite); });

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[k].first << ": " << o.detail << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : "some criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
