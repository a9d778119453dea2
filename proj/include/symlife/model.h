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

// The sensor-network instance, the distance-power energy family
// E = sum_n lambda_n * d^{a_n}, and instance validation.
//
// Nodes are indexed 0-based: collectors occupy [0, K), sensors [K, K + N).
// User-facing text (diagnostics, files) uses 1-based indices.

#ifndef SYMLIFE_MODEL_H_
#define SYMLIFE_MODEL_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "symlife/geometry.h"

namespace symlife {

struct EnergyTerm {
  double weight = 1.0;    // lambda_n
  double exponent = 2.0;  // a_n
};

struct EnergyModel {
  std::vector<EnergyTerm> terms;

  // sum_n lambda_n * d^{a_n}; d^0 == 1 for every d.
  double Cost(double d) const;
};

struct NetworkInstance {
  std::vector<Point> collectors;
  std::vector<Point> sensors;
  std::vector<double> data;  // Q_i per sensor, same order as `sensors`
  EnergyModel energy_model;

  int num_collectors() const { return static_cast<int>(collectors.size()); }
  int num_sensors() const { return static_cast<int>(sensors.size()); }
  int num_nodes() const { return num_collectors() + num_sensors(); }

  bool IsCollector(int node) const { return node < num_collectors(); }
  Point Position(int node) const;
  // Q of the node; 0 for collectors.
  double Data(int node) const;
  std::vector<Point> Positions() const;
};

// Dense (K+N) x (K+N) matrix indexed by node. The tag keeps energy and flow
// matrices from being mixed up.
template <class Tag>
class NodeMatrix {
 public:
  NodeMatrix() = default;
  explicit NodeMatrix(int n) : n_(n), v_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& operator()(int i, int j) { return v_[Index(i, j)]; }
  double operator()(int i, int j) const { return v_[Index(i, j)]; }
  std::span<const double> values() const { return v_; }

  friend bool operator==(const NodeMatrix&, const NodeMatrix&) = default;

 private:
  std::size_t Index(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<double> v_;
};

struct EnergyTag {};
struct FlowTag {};
using EnergyMatrix = NodeMatrix<EnergyTag>;
using FlowMatrix = NodeMatrix<FlowTag>;

// A node relabeling i -> perm[i].
using Permutation = std::vector<int>;

// r(perm[i], perm[j]) = m(i, j).
template <class Tag>
NodeMatrix<Tag> Conjugate(const NodeMatrix<Tag>& m, std::span<const int> perm) {
  NodeMatrix<Tag> r(m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) r(perm[i], perm[j]) = m(i, j);
  }
  return r;
}

struct Diagnostic {
  std::string message;
  std::vector<int> nodes;  // 1-based node indices involved, if any
};

// One diagnostic per violated invariant; empty iff the instance is valid.
std::vector<Diagnostic> ValidateInstance(const NetworkInstance& instance);

// Throws Error(kValidation) listing all diagnostics if there are any.
void RequireValid(const NetworkInstance& instance);

// Throws Error(kValidation) if the model has no terms, a negative or
// non-finite weight/exponent, or no positive weight.
void ValidateEnergyModel(const EnergyModel& model);

// E(i, j) = sum_n lambda_n * d(p_i, p_j)^{a_n} for i != j, zero diagonal.
EnergyMatrix BuildEnergyMatrix(const NetworkInstance& instance);

// True iff d(p_i,p_j) <= d(p_k,p_l) implies E(i,j) <= E(k,l) over all
// off-diagonal pairs; pairs at equal distance must agree within kGeoEps.
bool CheckMonotone(const EnergyMatrix& energy, const NetworkInstance& instance);

// Moves node i to label perm[i]. `perm` must map collectors to collectors
// and sensors to sensors; throws Error(kInvalidArgument) otherwise.
NetworkInstance Relabel(const NetworkInstance& instance,
                        std::span<const int> perm);

// Applies `g` to every node position.
NetworkInstance Transform(const NetworkInstance& instance, const Isometry& g);

}  // namespace symlife

#endif  // SYMLIFE_MODEL_H_
