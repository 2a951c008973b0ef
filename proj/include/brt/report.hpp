#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brt/errors.hpp"
#include "brt/oracle.hpp"
#include "brt/partition.hpp"

namespace brt::cli {

using Json = nlohmann::ordered_json;

// FNV-1a over the raw bytes; enough to fingerprint inputs in reports.
inline std::string fnv1a64(const std::string& bytes) {
  uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

inline Json partition_to_json(const ColorPartition& g) {
  Json j;
  j["universe_size"] = g.universe_size;
  j["num_classes"] = g.num_classes;
  j["declared_bound"] = g.declared_bound ? Json(*g.declared_bound) : Json(nullptr);
  j["class_of"] = g.class_of;
  return j;
}

inline ColorPartition partition_from_json(const Json& j) {
  ColorPartition g;
  g.universe_size = j.at("universe_size").get<int>();
  g.num_classes = j.at("num_classes").get<int>();
  if (!j.at("declared_bound").is_null()) g.declared_bound = j.at("declared_bound").get<int>();
  g.class_of = j.at("class_of").get<std::vector<int>>();
  g.check_well_formed();
  return g;
}

inline Json witnessed_max_to_json(const oracle::WitnessedMax& w) {
  Json j;
  j["size"] = w.size;
  j["witness"] = w.witness;
  return j;
}

inline Json validation_to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid();
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"class", v.cls}, {"x", v.x}, {"y", v.y}});
  j["violations"] = violations;
  return j;
}

inline Json violation_to_json(const HypothesisViolation& v) {
  Json j;
  j["witness"] = v.witness;
  j["note"] = v.note;
  return j;
}

// Top-level run report. Key order is fixed: meta, params, result,
// validation, timing. Timing stays empty unless explicitly requested, so
// identical (inputs, flags, seed) give byte-identical dumps.
struct RunReport {
  Json meta = Json::object();
  Json params = Json::object();
  Json result = Json::object();
  Json validation = Json::object();
  Json timing = Json::object();

  Json to_json() const {
    Json j;
    j["meta"] = meta;
    j["params"] = params;
    j["result"] = result;
    j["validation"] = validation;
    j["timing"] = timing;
    return j;
  }

  std::string dump() const { return to_json().dump(2) + "\n"; }
};

}  // namespace brt::cli
