// Copyright 2026 The qrsp authors
//
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

// Minimal JSON-schema checker for the test suite.  It covers exactly the
// keyword subset used by schema/run_report.schema.json: type, enum,
// properties, required, additionalProperties (boolean form), items (single
// schema), minItems, maxItems, minimum, maximum.  Unknown keywords are
// ignored, matching standard validator behavior.

#ifndef QRSP_TESTS_SCHEMA_CHECK_HPP_
#define QRSP_TESTS_SCHEMA_CHECK_HPP_

#include <string>
#include <vector>

#include <json.hpp>

namespace qrsp_test {

inline bool type_matches(const std::string& type, const nlohmann::json& v) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  return false;
}

inline void check_against(const nlohmann::json& schema, const nlohmann::json& v,
                          const std::string& path, std::vector<std::string>* errors) {
  if (schema.contains("type")) {
    const std::string type = schema["type"].get<std::string>();
    if (!type_matches(type, v)) {
      errors->push_back(path + ": expected type " + type + ", got " + v.type_name());
      return;  // further keyword checks assume the right shape
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& allowed : schema["enum"]) found = found || allowed == v;
    if (!found) errors->push_back(path + ": value " + v.dump() + " not in enum");
  }
  if (v.is_number()) {
    if (schema.contains("minimum") && v.get<double>() < schema["minimum"].get<double>()) {
      errors->push_back(path + ": " + v.dump() + " below minimum");
    }
    if (schema.contains("maximum") && v.get<double>() > schema["maximum"].get<double>()) {
      errors->push_back(path + ": " + v.dump() + " above maximum");
    }
  }
  if (v.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!v.contains(key.get<std::string>())) {
          errors->push_back(path + ": missing required key " + key.get<std::string>());
        }
      }
    }
    const auto& props = schema.contains("properties") ? schema["properties"]
                                                      : nlohmann::json::object();
    for (const auto& [key, child] : v.items()) {
      if (props.contains(key)) {
        check_against(props[key], child, path + "." + key, errors);
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        errors->push_back(path + ": unexpected key " + key);
      }
    }
  }
  if (v.is_array()) {
    if (schema.contains("minItems") && v.size() < schema["minItems"].get<std::size_t>()) {
      errors->push_back(path + ": fewer than minItems entries");
    }
    if (schema.contains("maxItems") && v.size() > schema["maxItems"].get<std::size_t>()) {
      errors->push_back(path + ": more than maxItems entries");
    }
    if (schema.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        check_against(schema["items"], v[i], path + "[" + std::to_string(i) + "]", errors);
      }
    }
  }
}

// Returns the list of violations; empty means the value conforms.
inline std::vector<std::string> schema_errors(const nlohmann::json& schema,
                                              const nlohmann::json& value) {
  std::vector<std::string> errors;
  check_against(schema, value, "$", &errors);
  return errors;
}

}  // namespace qrsp_test

#endif  // QRSP_TESTS_SCHEMA_CHECK_HPP_
