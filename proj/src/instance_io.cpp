#include "wisopt/instance_io.hpp"

#include <fstream>
#include <stdexcept>

#include "wisopt/families.hpp"

namespace wisopt {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("instance field '" + field + "': " + what);
}

json require_field(const json& doc, const std::string& key, const std::string& label = "") {
  if (!doc.contains(key)) fail(label.empty() ? key : label, "missing");
  return doc.at(key);
}

std::vector<int> int_list(const json& value, const std::string& field) {
  if (!value.is_array()) fail(field, "expected a list of integers");
  std::vector<int> out;
  for (const auto& e : value) {
    if (!e.is_number_integer()) fail(field, "expected a list of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

Instance family_instance(const json& doc) {
  const std::string family = doc.at("family").get<std::string>();
  if (!doc.contains("m")) fail("m", "missing (required with 'family')");
  const int m = doc.at("m").get<int>();

  if (doc.contains("objective")) fail("objective", "not allowed with a named family");
  if (family == "example_3_1") return make_example_3_1(m);
  if (family == "lower_bound") {
    LowerBoundFamily fam(m);
    return Instance{fam.system(), fam.weights(), ObjectiveTable::identity(5 * m),
                    "lower_bound(m=" + std::to_string(m) + ")"};
  }
  if (family == "membership") {
    MembershipFamily fam(m);
    return Instance{fam.system(), fam.weights(), ObjectiveTable::identity(m),
                    "membership(m=" + std::to_string(m) + ")"};
  }
  fail("family", "unknown family '" + family + "'");
}

}  // namespace

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("instance document must be an object");
  if (doc.contains("family")) return family_instance(doc);

  const int n = require_field(doc, "n").get<int>();
  if (n < 0) fail("n", "must be nonnegative");

  PrimitiveTuple tuple;
  try {
    tuple = PrimitiveTuple(int_list(require_field(doc, "tuple"), "tuple"));
  } catch (const std::invalid_argument& e) {
    fail("tuple", e.what());
  }

  const std::vector<int> weight_values = int_list(require_field(doc, "weights"), "weights");
  if (static_cast<int>(weight_values.size()) != n) fail("weights", "length differs from n");
  WeightVector weights({}, PrimitiveTuple{});
  try {
    weights = WeightVector(weight_values, tuple);
  } catch (const std::invalid_argument& e) {
    fail("weights", e.what());
  }

  const json system_doc = require_field(doc, "system");
  const json kind_doc = require_field(system_doc, "kind", "system.kind");
  const std::string kind = kind_doc.is_string() ? kind_doc.get<std::string>() : "";
  std::vector<GroundPoint> points;
  const json points_doc = system_doc.contains("points") ? system_doc.at("points") : json::array();
  for (std::size_t i = 0; i < points_doc.size(); ++i) {
    const auto& entry = points_doc.at(i);
    if (!entry.is_string()) fail("system.points[" + std::to_string(i) + "]", "expected a 0/1 string");
    GroundPoint p;
    try {
      p = GroundPoint::from_string(entry.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail("system.points[" + std::to_string(i) + "]", e.what());
    }
    if (p.size() != n) fail("system.points[" + std::to_string(i) + "]", "length differs from n");
    points.push_back(std::move(p));
  }

  IndependenceSystem system = IndependenceSystem::from_generators(0, {});
  if (kind == "explicit") {
    const bool strict = system_doc.value("strict", false);
    try {
      system = IndependenceSystem::from_points(n, points, strict);
    } catch (const std::invalid_argument& e) {
      fail("system.points", e.what());
    }
  } else if (kind == "generators") {
    system = IndependenceSystem::from_generators(n, std::move(points));
  } else {
    fail("system.kind", "expected \"explicit\" or \"generators\"");
  }

  const json objective_doc = require_field(doc, "objective");
  const json objective_kind_doc = require_field(objective_doc, "kind", "objective.kind");
  const std::string objective_kind =
      objective_kind_doc.is_string() ? objective_kind_doc.get<std::string>() : "";
  std::vector<double> values;
  if (objective_kind == "table") {
    const json values_doc = require_field(objective_doc, "values", "objective.values");
    if (!values_doc.is_array()) fail("objective.values", "expected a list of numbers");
    for (const auto& e : values_doc) {
      if (!e.is_number()) fail("objective.values", "expected a list of numbers");
      values.push_back(e.get<double>());
    }
  } else if (objective_kind == "named") {
    const json name_doc = require_field(objective_doc, "name", "objective.name");
    const std::string name = name_doc.is_string() ? name_doc.get<std::string>() : "";
    if (name != "example_3_1") fail("objective.name", "unknown named objective '" + name + "'");
    if (!objective_doc.contains("m")) fail("objective.m", "missing");
    values = example_3_1_objective(objective_doc.at("m").get<int>()).values();
  } else {
    fail("objective.kind", "expected \"table\" or \"named\"");
  }
  if (values.empty()) fail("objective.values", "must cover value 0");

  const int max_weight = weights.weight_of(system.maximize(weight_values));
  if (static_cast<int>(values.size()) <= max_weight) {
    fail("objective.values",
         "objective table too short: max achievable weight is " + std::to_string(max_weight));
  }

  return Instance{std::move(system), std::move(weights), ObjectiveTable(std::move(values)),
                  doc.value("name", "")};
}

json instance_to_json(const Instance& instance) {
  json doc;
  doc["n"] = instance.system.n();
  doc["tuple"] = instance.weights.tuple().entries();
  doc["weights"] = instance.weights.weights();

  json system_doc;
  json points = json::array();
  if (instance.system.kind() == IndependenceSystem::Kind::kGenerators) {
    system_doc["kind"] = "generators";
    for (const auto& g : instance.system.generators()) points.push_back(g.to_string());
  } else {
    system_doc["kind"] = "explicit";
    for (const auto& p : instance.system.all_points()) points.push_back(p.to_string());
  }
  system_doc["points"] = std::move(points);
  doc["system"] = std::move(system_doc);

  doc["objective"] = json{{"kind", "table"}, {"values", instance.objective.values()}};
  if (!instance.name.empty()) doc["name"] = instance.name;
  return doc;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("instance file is not valid JSON: " + std::string(e.what()));
  }
  Instance inst = instance_from_json(doc);
  if (inst.name.empty()) inst.name = path;
  return inst;
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json(instance).dump(2) << "\n";
}

}  // namespace wisopt
