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

#include "symlife/model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "symlife/error.h"

namespace symlife {

double EnergyModel::Cost(double d) const {
  double total = 0.0;
  for (const EnergyTerm& t : terms) {
    total += t.weight * (t.exponent == 0.0 ? 1.0 : std::pow(d, t.exponent));
  }
  return total;
}

Point NetworkInstance::Position(int node) const {
  return IsCollector(node) ? collectors[node] : sensors[node - num_collectors()];
}

double NetworkInstance::Data(int node) const {
  return IsCollector(node) ? 0.0 : data[node - num_collectors()];
}

std::vector<Point> NetworkInstance::Positions() const {
  std::vector<Point> out(collectors);
  out.insert(out.end(), sensors.begin(), sensors.end());
  return out;
}

namespace {

std::vector<Diagnostic> EnergyModelDiagnostics(const EnergyModel& model) {
  std::vector<Diagnostic> out;
  if (model.terms.empty()) {
    out.push_back({"energy model has no terms", {}});
    return out;
  }
  bool any_positive = false;
  for (std::size_t n = 0; n < model.terms.size(); ++n) {
    const EnergyTerm& t = model.terms[n];
    const std::string term = " in energy term " + std::to_string(n + 1);
    if (!std::isfinite(t.weight) || !std::isfinite(t.exponent)) {
      out.push_back({"non-finite value" + term, {}});
      continue;
    }
    if (t.weight < 0.0) out.push_back({"negative weight" + term, {}});
    if (t.exponent < 0.0) out.push_back({"negative exponent" + term, {}});
    any_positive = any_positive || t.weight > 0.0;
  }
  if (!any_positive) out.push_back({"energy model has no positive weight", {}});
  return out;
}

std::string JoinDiagnostics(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const Diagnostic& d : diags) {
    if (!out.empty()) out += "; ";
    out += d.message;
  }
  return out;
}

}  // namespace

std::vector<Diagnostic> ValidateInstance(const NetworkInstance& instance) {
  std::vector<Diagnostic> out;
  if (instance.collectors.empty()) out.push_back({"no collectors", {}});
  if (instance.sensors.empty()) out.push_back({"no sensors", {}});
  if (instance.data.size() != instance.sensors.size()) {
    out.push_back({"data list has " + std::to_string(instance.data.size()) +
                       " entries for " + std::to_string(instance.sensors.size()) +
                       " sensors",
                   {}});
  }
  const int n = instance.num_nodes();
  for (int i = 0; i < n; ++i) {
    if (!IsFinite(instance.Position(i))) {
      out.push_back({"non-finite coordinates at node " + std::to_string(i + 1),
                     {i + 1}});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (Distance(instance.Position(i), instance.Position(j)) <= kGeoEps) {
        std::ostringstream msg;
        msg << "coincident nodes (" << i + 1 << "," << j + 1 << ")";
        out.push_back({msg.str(), {i + 1, j + 1}});
      }
    }
  }
  const int k = instance.num_collectors();
  for (std::size_t s = 0; s < instance.data.size(); ++s) {
    const double q = instance.data[s];
    const int node = k + static_cast<int>(s) + 1;
    if (!std::isfinite(q) || q < 0.0) {
      out.push_back({"negative or non-finite data at node " + std::to_string(node),
                     {node}});
    }
  }
  for (Diagnostic& d : EnergyModelDiagnostics(instance.energy_model)) {
    out.push_back(std::move(d));
  }
  return out;
}

void RequireValid(const NetworkInstance& instance) {
  const std::vector<Diagnostic> diags = ValidateInstance(instance);
  if (!diags.empty()) {
    throw Error(ErrorCode::kValidation,
                "invalid instance: " + JoinDiagnostics(diags));
  }
}

void ValidateEnergyModel(const EnergyModel& model) {
  const std::vector<Diagnostic> diags = EnergyModelDiagnostics(model);
  if (!diags.empty()) {
    throw Error(ErrorCode::kValidation,
                "invalid energy model: " + JoinDiagnostics(diags));
  }
}

EnergyMatrix BuildEnergyMatrix(const NetworkInstance& instance) {
  ValidateEnergyModel(instance.energy_model);
  const int n = instance.num_nodes();
  EnergyMatrix e(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double c = instance.energy_model.Cost(
          Distance(instance.Position(i), instance.Position(j)));
      e(i, j) = c;
      e(j, i) = c;
    }
  }
  return e;
}

bool CheckMonotone(const EnergyMatrix& energy, const NetworkInstance& instance) {
  const int n = instance.num_nodes();
  if (energy.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "energy matrix dimension does not match instance");
  }
  struct Pair {
    double d;
    double e;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      pairs.push_back({Distance(instance.Position(i), instance.Position(j)),
                       energy(i, j)});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return a.d < b.d || (a.d == b.d && a.e < b.e);
  });
  // Walk distance classes in increasing order; every class must sit above
  // the running maximum of all shorter classes.
  double prev_max = -std::numeric_limits<double>::infinity();
  std::size_t start = 0;
  while (start < pairs.size()) {
    std::size_t end = start + 1;
    while (end < pairs.size() && NearlyEqual(pairs[end].d, pairs[start].d)) ++end;
    double lo = pairs[start].e;
    double hi = pairs[start].e;
    for (std::size_t k = start; k < end; ++k) {
      lo = std::min(lo, pairs[k].e);
      hi = std::max(hi, pairs[k].e);
    }
    if (!NearlyEqual(lo, hi)) return false;
    if (lo < prev_max && !NearlyEqual(lo, prev_max)) return false;
    prev_max = std::max(prev_max, hi);
    start = end;
  }
  return true;
}

NetworkInstance Relabel(const NetworkInstance& instance,
                        std::span<const int> perm) {
  const int n = instance.num_nodes();
  const int k = instance.num_collectors();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int j = perm[i];
    if (j < 0 || j >= n || seen[j] || (i < k) != (j < k)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "relabeling must be a kind-preserving permutation");
    }
    seen[j] = true;
  }
  NetworkInstance out = instance;
  for (int i = 0; i < n; ++i) {
    const int j = perm[i];
    if (i < k) {
      out.collectors[j] = instance.collectors[i];
    } else {
      out.sensors[j - k] = instance.sensors[i - k];
      out.data[j - k] = instance.data[i - k];
    }
  }
  return out;
}

NetworkInstance Transform(const NetworkInstance& instance, const Isometry& g) {
  NetworkInstance out = instance;
  for (Point& p : out.collectors) p = g(p);
  for (Point& p : out.sensors) p = g(p);
  return out;
}

}  // namespace symlife
