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

// Shared test networks and random helpers.

#ifndef SYMLIFE_TESTS_SUPPORT_FIXTURES_H_
#define SYMLIFE_TESTS_SUPPORT_FIXTURES_H_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "symlife/generator.h"
#include "symlife/model.h"

namespace symlife::testing {

inline EnergyModel SquaredDistance() { return EnergyModel{{{1.0, 2.0}}}; }

// Collector at the origin, sensors at (1,0) and (2,0), unit data.
inline NetworkInstance Chain() {
  return {{{0, 0}}, {{1, 0}, {2, 0}}, {1, 1}, SquaredDistance()};
}

// Collector at the origin, four unit-data sensors on the unit circle.
inline NetworkInstance SquareWithCenter() {
  return {{{0, 0}}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {1, 1, 1, 1},
          SquaredDistance()};
}

inline NetworkInstance Scalene() {
  return {{{0, 0}}, {{3, 0.5}, {1, 2.2}, {-1.7, 0.4}}, {1, 2, 1},
          SquaredDistance()};
}

inline Point Polar(double r, double deg) {
  const double a = deg * std::numbers::pi / 180.0;
  return {r * std::cos(a), r * std::sin(a)};
}

// Two orbits of four sensors around a center collector; the outer orbit is
// turned by `outer_deg` relative to the inner one.
inline NetworkInstance TwoSquares(double outer_deg) {
  NetworkInstance out{{{0, 0}}, {}, {}, SquaredDistance()};
  for (int k = 0; k < 4; ++k) {
    out.sensors.push_back(Polar(1.0, 90.0 * k));
    out.data.push_back(1.0);
  }
  for (int k = 0; k < 4; ++k) {
    out.sensors.push_back(Polar(2.0, outer_deg + 90.0 * k));
    out.data.push_back(1.0);
  }
  return out;
}

inline NetworkInstance Pinwheel() { return TwoSquares(20.0); }
inline NetworkInstance AlignedSquares() { return TwoSquares(0.0); }

// D4 network: seven sensors and one collector inside the half-wedge, two
// collectors on the lower mirror, one on the upper mirror, one at the center.
inline GeneratorSpec Dihedral4Spec() {
  GeneratorSpec spec;
  spec.kind = GroupKind::kDihedral;
  spec.fold = 4;
  for (auto [r, deg] : std::vector<std::pair<double, double>>{
           {1.0, 10}, {1.6, 30}, {2.2, 15}, {2.8, 38}, {3.4, 8}, {4.0, 25},
           {4.6, 40}}) {
    spec.seeds.push_back({Polar(r, deg), false, 1.0});
  }
  spec.seeds.push_back({Polar(3.1, 22), true, 0.0});
  spec.border_lower_radii = {2.0, 5.0};
  spec.border_upper_radii = {3.5};
  return spec;
}

// Uniform double in [lo, hi) from raw generator bits.
inline double Uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

inline int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// K collectors and N sensors scattered in a square, data in [0.5, 2].
inline NetworkInstance RandomInstance(std::mt19937_64& rng, int k, int n,
                                      EnergyModel model = SquaredDistance()) {
  NetworkInstance out;
  out.energy_model = std::move(model);
  for (int c = 0; c < k; ++c) {
    out.collectors.push_back({Uniform(rng, -3, 3), Uniform(rng, -3, 3)});
  }
  for (int s = 0; s < n; ++s) {
    out.sensors.push_back({Uniform(rng, -3, 3), Uniform(rng, -3, 3)});
    out.data.push_back(Uniform(rng, 0.5, 2.0));
  }
  return out;
}

// Generator spec with random orbits for the property suites; alternates
// center collectors and border collectors so both region shapes occur.
inline GeneratorSpec RandomSymmetricSpec(GroupKind kind, int fold,
                                         std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.fold = fold;
  spec.rng_seed = seed;
  RandomOrbits random;
  // A single orbit of a rotation group is a regular polygon, which also
  // has mirrors, so rotation-only specs get at least two.
  random.sensor_orbits = kind == GroupKind::kCyclic ? 2 + static_cast<int>(seed % 2)
                                                    : 1 + static_cast<int>(seed % 3);
  random.collector_orbits = seed % 4 == 3 ? 1 : 0;
  random.data_min = 0.5;
  random.data_max = 2.0;
  spec.random = random;
  spec.center_collector = seed % 4 != 3;
  if (kind == GroupKind::kDihedral && seed % 2 == 1) {
    spec.border_lower_radii = {2.5};
  }
  return spec;
}

}  // namespace symlife::testing

#endif  // SYMLIFE_TESTS_SUPPORT_FIXTURES_H_
