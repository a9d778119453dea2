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

// File formats.
//
// Network file (JSON, schema version 1):
//
//   {
//     "schema_version": 1,
//     "collectors": [[x, y], ...],
//     "sensors": [[x, y, Q], ...],
//     "energy_model": [[lambda, a], ...]   // optional, default [[1, 2]]
//   }
//
// Generator spec (JSON):
//
//   {
//     "kind": "cyclic" | "dihedral", "M": 4,
//     "seeds": [{"x": 1, "y": 0.3, "kind": "sensor", "Q": 1}, ...],
//     "center_collector": true,
//     "border_collectors": {"lower": [radius, ...], "upper": [radius, ...]},
//     "rng_seed": 0,
//     "random": {"sensor_orbits": 3, "collector_orbits": 0,
//                "radius": [1, 3], "data": [1, 1]},
//     "energy_model": [[1, 2]]
//   }
//
// Flow file (CSV): header "i,j,q", one line per positive entry, 1-based
// node indices in row-major order.

#ifndef SYMLIFE_IO_H_
#define SYMLIFE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "symlife/generator.h"
#include "symlife/model.h"

namespace symlife {

inline constexpr int kNetworkSchemaVersion = 1;

// Parses JSON text; syntax errors carry "<source>:<line>:<column>". Shape
// errors name the offending field. Both throw Error(kParse). The instance is
// not validated beyond its shape.
nlohmann::json ParseJson(std::string_view text, std::string_view source);

NetworkInstance NetworkFromJson(const nlohmann::json& doc);
nlohmann::json NetworkToJson(const NetworkInstance& instance);

GeneratorSpec GeneratorSpecFromJson(const nlohmann::json& doc);

EnergyModel EnergyModelFromJson(const nlohmann::json& doc);
nlohmann::json EnergyModelToJson(const EnergyModel& model);

// Reads the whole file; Error(kParse) if it cannot be opened.
std::string ReadTextFile(const std::filesystem::path& path);
// Error(kInvalidArgument) on failure.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

NetworkInstance ReadNetworkFile(const std::filesystem::path& path);

std::string FlowToCsv(const FlowMatrix& flow);

// Shortest decimal text that round-trips the double.
std::string FormatDouble(double v);

// FNV-1a 64 of the canonical JSON serialization, as 16 hex digits.
std::string InstanceDigest(const NetworkInstance& instance);

}  // namespace symlife

#endif  // SYMLIFE_IO_H_
