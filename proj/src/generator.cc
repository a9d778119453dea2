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

#include "symlife/generator.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "symlife/error.h"

namespace symlife {
namespace {

// Uniform in [lo, hi] from the raw engine output; the standard distributions
// are not reproducible across library implementations.
double Uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Point Polar(double r, double theta) {
  return {r * std::cos(theta), r * std::sin(theta)};
}

double GeneratingSpan(const GeneratorSpec& spec) {
  return spec.kind == GroupKind::kDihedral ? std::numbers::pi / spec.fold
                                           : kTwoPi / spec.fold;
}

// Images of `p` under the group, sorted by polar angle.
std::vector<Point> OrbitOf(Point p, const GeneratorSpec& spec) {
  std::vector<Point> out;
  const double r = Norm(p);
  const double theta = PolarAngle(p);
  for (int k = 0; k < spec.fold; ++k) {
    const double step = kTwoPi * k / spec.fold;
    // The seed itself and its plain mirror image keep their exact bits.
    out.push_back(k == 0 ? p : Polar(r, theta + step));
    if (spec.kind == GroupKind::kDihedral) {
      out.push_back(k == 0 ? Point{p.x, -p.y} : Polar(r, -theta + step));
    }
  }
  std::sort(out.begin(), out.end(),
            [](Point a, Point b) { return PolarAngle(a) < PolarAngle(b); });
  // Points on a mirror line appear twice.
  out.erase(std::unique(out.begin(), out.end(),
                        [](Point a, Point b) { return Distance(a, b) <= kGeoEps; }),
            out.end());
  return out;
}

}  // namespace

std::vector<GeneratorSeed> ExpandSeeds(const GeneratorSpec& spec) {
  std::vector<GeneratorSeed> seeds = spec.seeds;
  if (!spec.random) return seeds;
  const RandomOrbits& r = *spec.random;
  if (r.sensor_orbits < 0 || r.collector_orbits < 0 ||
      !(r.radius_min > 0.0) || r.radius_max < r.radius_min ||
      r.data_min < 0.0 || r.data_max < r.data_min) {
    throw Error(ErrorCode::kInvalidArgument, "invalid random orbit parameters");
  }
  std::mt19937_64 rng(spec.rng_seed);
  const double span = GeneratingSpan(spec);
  // Cyclic: window [0.05, 0.45] of the sector, narrower than half a sector.
  // Dihedral: [0.1, 0.9] of the mirror wedge, away from both mirrors.
  const double lo = spec.kind == GroupKind::kDihedral ? 0.1 * span : 0.05 * span;
  const double hi = spec.kind == GroupKind::kDihedral ? 0.9 * span : 0.45 * span;
  const int total = r.sensor_orbits + r.collector_orbits;
  for (int s = 0; s < total; ++s) {
    GeneratorSeed seed;
    seed.collector = s >= r.sensor_orbits;
    for (int attempt = 0;; ++attempt) {
      seed.point = Polar(Uniform(rng, r.radius_min, r.radius_max),
                         Uniform(rng, lo, hi));
      const bool clear = std::all_of(seeds.begin(), seeds.end(), [&](const auto& o) {
        return Distance(o.point, seed.point) > 1e-3 * r.radius_max;
      });
      if (clear) break;
      if (attempt > 1000) {
        throw Error(ErrorCode::kInvalidArgument, "could not place random seeds");
      }
    }
    seed.data = seed.collector ? 0.0 : Uniform(rng, r.data_min, r.data_max);
    seeds.push_back(seed);
  }
  return seeds;
}

NetworkInstance Generate(const GeneratorSpec& spec) {
  if (spec.kind != GroupKind::kCyclic && spec.kind != GroupKind::kDihedral) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator kind must be cyclic or dihedral");
  }
  if (spec.fold < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator fold must be >= 2, got " + std::to_string(spec.fold));
  }
  const std::vector<GeneratorSeed> seeds = ExpandSeeds(spec);
  const double span = GeneratingSpan(spec);
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    const Point p = seeds[s].point;
    const std::string which = "seed " + std::to_string(s + 1);
    if (!IsFinite(p) || Norm(p) <= kGeoEps) {
      throw Error(ErrorCode::kInvalidArgument, which + " is at the origin");
    }
    const double theta = PolarAngle(p);
    const double r = Norm(p);
    const bool on_boundary = std::abs(std::sin(theta)) * r <= kGeoEps ||
                             std::abs(std::sin(theta - span)) * r <= kGeoEps;
    if (on_boundary) {
      throw Error(ErrorCode::kInvalidArgument,
                  which + (spec.kind == GroupKind::kDihedral
                               ? " lies on a mirror line"
                               : " lies on the generating wedge boundary"));
    }
    if (theta >= span) {
      throw Error(ErrorCode::kInvalidArgument,
                  which + " lies outside the generating wedge");
    }
  }
  if (spec.kind != GroupKind::kDihedral &&
      (!spec.border_lower_radii.empty() || !spec.border_upper_radii.empty())) {
    throw Error(ErrorCode::kInvalidArgument,
                "border collectors require a dihedral generator");
  }

  NetworkInstance out;
  out.energy_model = spec.energy_model;
  if (spec.center_collector) out.collectors.push_back({0.0, 0.0});
  for (const GeneratorSeed& s : seeds) {
    if (!s.collector) continue;
    for (Point p : OrbitOf(s.point, spec)) out.collectors.push_back(p);
  }
  auto add_border = [&](const std::vector<double>& radii, double angle) {
    for (double r : radii) {
      if (!(r > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "border collector radius must be positive");
      }
      for (Point p : OrbitOf(Polar(r, angle), spec)) out.collectors.push_back(p);
    }
  };
  add_border(spec.border_lower_radii, 0.0);
  add_border(spec.border_upper_radii, span);
  for (const GeneratorSeed& s : seeds) {
    if (s.collector) continue;
    for (Point p : OrbitOf(s.point, spec)) {
      out.sensors.push_back(p);
      out.data.push_back(s.data);
    }
  }
  return out;
}

}  // namespace symlife
