#pragma once

#include <string>

#include <json.hpp>

#include "wisopt/instance.hpp"

namespace wisopt {

// Instance document:
//   n: int, tuple: [int], weights: [int],
//   system: {kind: "explicit"|"generators", points: ["0110", ...], strict?: bool},
//   objective: {kind: "table", values: [...]} | {kind: "named", name: "example_3_1", m: int}
// or a named family: {family: "example_3_1"|"lower_bound"|"membership", m: int}.
// Point strings put index 1 at the leftmost character.
nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& doc);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace wisopt
