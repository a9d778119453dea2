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

// Networks with designed symmetry: seed points in a generating wedge are
// replicated over a cyclic or dihedral group about the origin.

#ifndef SYMLIFE_GENERATOR_H_
#define SYMLIFE_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "symlife/model.h"
#include "symlife/symmetry.h"

namespace symlife {

struct GeneratorSeed {
  Point point;
  bool collector = false;
  double data = 1.0;  // ignored for collectors
};

// Random seeds inside the generating wedge, all within an angular window
// narrower than half a sector so the nearest-element fundamental region is
// closed.
struct RandomOrbits {
  int sensor_orbits = 3;
  int collector_orbits = 0;
  double radius_min = 1.0;
  double radius_max = 3.0;
  double data_min = 1.0;
  double data_max = 1.0;
};

struct GeneratorSpec {
  GroupKind kind = GroupKind::kCyclic;  // kCyclic or kDihedral
  int fold = 2;                         // M
  std::vector<GeneratorSeed> seeds;
  bool center_collector = true;
  // Dihedral only: collectors on the mirror half-lines at angle 0 and pi/M.
  std::vector<double> border_lower_radii;
  std::vector<double> border_upper_radii;
  std::uint64_t rng_seed = 0;
  std::optional<RandomOrbits> random;  // appended to `seeds`
  EnergyModel energy_model{{{1.0, 2.0}}};
};

// Node order: center collector, collector orbits, then sensor orbits; each
// orbit lists its members by increasing polar angle. Throws
// Error(kInvalidArgument) for M < 2, a seed at the origin, on the boundary
// of the generating wedge (cyclic: [0, 2pi/M); dihedral: [0, pi/M]) or
// outside it.
NetworkInstance Generate(const GeneratorSpec& spec);

// The seeds Generate would use, with `random` expanded deterministically from
// rng_seed.
std::vector<GeneratorSeed> ExpandSeeds(const GeneratorSpec& spec);

}  // namespace symlife

#endif  // SYMLIFE_GENERATOR_H_
