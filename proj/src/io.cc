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

#include "symlife/io.h"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "symlife/error.h"

namespace symlife {

using nlohmann::json;

namespace {

[[noreturn]] void ShapeError(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

double Number(const json& v, const std::string& where) {
  if (!v.is_number()) ShapeError(where + ": expected a number");
  return v.get<double>();
}

std::vector<double> NumberTuple(const json& v, std::size_t size,
                                const std::string& where,
                                const std::string& shape) {
  if (!v.is_array() || v.size() != size) {
    ShapeError(where + ": expected " + shape);
  }
  std::vector<double> out;
  for (std::size_t k = 0; k < size; ++k) {
    out.push_back(Number(v[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

const json& Array(const json& doc, const char* key, bool required) {
  static const json kEmpty = json::array();
  if (!doc.contains(key)) {
    if (required) ShapeError(std::string("missing field \"") + key + "\"");
    return kEmpty;
  }
  const json& v = doc.at(key);
  if (!v.is_array()) ShapeError(std::string("field \"") + key + "\" must be an array");
  return v;
}

}  // namespace

json ParseJson(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0,
                                                   text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (const auto pos = detail.find("syntax error"); pos != std::string::npos) {
      detail = detail.substr(pos);
    }
    std::ostringstream msg;
    msg << source << ":" << line << ":" << column << ": " << detail;
    throw Error(ErrorCode::kParse, msg.str());
  }
}

EnergyModel EnergyModelFromJson(const json& doc) {
  if (!doc.is_array()) ShapeError("energy_model: expected [[lambda, a], ...]");
  EnergyModel model;
  for (std::size_t n = 0; n < doc.size(); ++n) {
    const auto t = NumberTuple(doc[n], 2, "energy_model[" + std::to_string(n) + "]",
                               "[lambda, a]");
    model.terms.push_back({t[0], t[1]});
  }
  return model;
}

json EnergyModelToJson(const EnergyModel& model) {
  json out = json::array();
  for (const EnergyTerm& t : model.terms) out.push_back({t.weight, t.exponent});
  return out;
}

NetworkInstance NetworkFromJson(const json& doc) {
  if (!doc.is_object()) ShapeError("network file must be a JSON object");
  if (!doc.contains("schema_version")) ShapeError("missing field \"schema_version\"");
  const json& version = doc.at("schema_version");
  if (!version.is_number_integer() || version.get<int>() != kNetworkSchemaVersion) {
    ShapeError("unsupported schema_version (expected " +
               std::to_string(kNetworkSchemaVersion) + ")");
  }
  NetworkInstance out;
  const json& collectors = Array(doc, "collectors", true);
  for (std::size_t k = 0; k < collectors.size(); ++k) {
    const auto p = NumberTuple(collectors[k], 2,
                               "collectors[" + std::to_string(k) + "]", "[x, y]");
    out.collectors.push_back({p[0], p[1]});
  }
  const json& sensors = Array(doc, "sensors", true);
  for (std::size_t k = 0; k < sensors.size(); ++k) {
    const auto p = NumberTuple(sensors[k], 3, "sensors[" + std::to_string(k) + "]",
                               "[x, y, Q]");
    out.sensors.push_back({p[0], p[1]});
    out.data.push_back(p[2]);
  }
  out.energy_model = doc.contains("energy_model")
                         ? EnergyModelFromJson(doc.at("energy_model"))
                         : EnergyModel{{{1.0, 2.0}}};
  return out;
}

json NetworkToJson(const NetworkInstance& instance) {
  json out;
  out["schema_version"] = kNetworkSchemaVersion;
  out["collectors"] = json::array();
  for (Point p : instance.collectors) out["collectors"].push_back({p.x, p.y});
  out["sensors"] = json::array();
  for (int s = 0; s < instance.num_sensors(); ++s) {
    const Point p = instance.sensors[s];
    const double q = s < static_cast<int>(instance.data.size()) ? instance.data[s] : 0.0;
    out["sensors"].push_back({p.x, p.y, q});
  }
  out["energy_model"] = EnergyModelToJson(instance.energy_model);
  return out;
}

GeneratorSpec GeneratorSpecFromJson(const json& doc) {
  if (!doc.is_object()) ShapeError("generator spec must be a JSON object");
  GeneratorSpec spec;
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    ShapeError("generator spec: missing string field \"kind\"");
  }
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "cyclic") {
    spec.kind = GroupKind::kCyclic;
  } else if (kind == "dihedral") {
    spec.kind = GroupKind::kDihedral;
  } else {
    ShapeError("generator spec: kind must be \"cyclic\" or \"dihedral\"");
  }
  if (!doc.contains("M") || !doc.at("M").is_number_integer()) {
    ShapeError("generator spec: missing integer field \"M\"");
  }
  spec.fold = doc.at("M").get<int>();
  const json& seeds = Array(doc, "seeds", false);
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    const std::string where = "seeds[" + std::to_string(k) + "]";
    const json& s = seeds[k];
    if (!s.is_object()) ShapeError(where + ": expected an object");
    GeneratorSeed seed;
    seed.point = {Number(s.value("x", json()), where + ".x"),
                  Number(s.value("y", json()), where + ".y")};
    const std::string node_kind = s.value("kind", std::string("sensor"));
    if (node_kind != "sensor" && node_kind != "collector") {
      ShapeError(where + ".kind: expected \"sensor\" or \"collector\"");
    }
    seed.collector = node_kind == "collector";
    seed.data = s.contains("Q") ? Number(s.at("Q"), where + ".Q") : 1.0;
    spec.seeds.push_back(seed);
  }
  if (doc.contains("center_collector")) {
    if (!doc.at("center_collector").is_boolean()) {
      ShapeError("generator spec: center_collector must be a boolean");
    }
    spec.center_collector = doc.at("center_collector").get<bool>();
  }
  if (doc.contains("border_collectors")) {
    const json& b = doc.at("border_collectors");
    if (!b.is_object()) ShapeError("border_collectors must be an object");
    for (const json& r : Array(b, "lower", false)) {
      spec.border_lower_radii.push_back(Number(r, "border_collectors.lower"));
    }
    for (const json& r : Array(b, "upper", false)) {
      spec.border_upper_radii.push_back(Number(r, "border_collectors.upper"));
    }
  }
  if (doc.contains("rng_seed")) {
    if (!doc.at("rng_seed").is_number_integer()) {
      ShapeError("generator spec: rng_seed must be an integer");
    }
    spec.rng_seed = doc.at("rng_seed").get<std::uint64_t>();
  }
  if (doc.contains("random")) {
    const json& r = doc.at("random");
    if (!r.is_object()) ShapeError("random must be an object");
    RandomOrbits ro;
    ro.sensor_orbits = r.value("sensor_orbits", ro.sensor_orbits);
    ro.collector_orbits = r.value("collector_orbits", ro.collector_orbits);
    if (r.contains("radius")) {
      const auto v = NumberTuple(r.at("radius"), 2, "random.radius", "[min, max]");
      ro.radius_min = v[0];
      ro.radius_max = v[1];
    }
    if (r.contains("data")) {
      const auto v = NumberTuple(r.at("data"), 2, "random.data", "[min, max]");
      ro.data_min = v[0];
      ro.data_max = v[1];
    }
    spec.random = ro;
  }
  if (doc.contains("energy_model")) {
    spec.energy_model = EnergyModelFromJson(doc.at("energy_model"));
  }
  return spec;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
}

NetworkInstance ReadNetworkFile(const std::filesystem::path& path) {
  return NetworkFromJson(ParseJson(ReadTextFile(path), path.string()));
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string FlowToCsv(const FlowMatrix& flow) {
  std::string out = "i,j,q\n";
  for (int i = 0; i < flow.size(); ++i) {
    for (int j = 0; j < flow.size(); ++j) {
      if (flow(i, j) > 0.0) {
        out += std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
               FormatDouble(flow(i, j)) + "\n";
      }
    }
  }
  return out;
}

std::string InstanceDigest(const NetworkInstance& instance) {
  const std::string text = NetworkToJson(instance).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace symlife
