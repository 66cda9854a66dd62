#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "wisopt/generate.hpp"
#include "wisopt/instance_io.hpp"
#include "wisopt/report_io.hpp"
#include "wisopt/verify.hpp"

namespace py = pybind11;
using namespace wisopt;

namespace {

py::object json_to_py(const nlohmann::json& value) {
  switch (value.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(value.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(value.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(value.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(value.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(value.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : value) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = value.begin(); it != value.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default:
      return py::none();
  }
}

PrimitiveTuple tuple_of(const std::vector<int>& entries) { return PrimitiveTuple(entries); }

SolveReport dispatch(const Instance& inst, const std::string& solver,
                     const std::optional<std::vector<int>>& lam) {
  SystemLinearOracle oracle(inst.system);
  TableComparisonOracle f(inst.objective);
  if (solver == "main") {
    std::optional<MultiIndex> lam_opt;
    if (lam) lam_opt = *lam;
    return r_best_solve(oracle, inst.weights, f, lam_opt);
  }
  if (solver == "naive") return naive_solve(oracle, inst.weights, f);
  if (solver == "quasiconvex") return quasiconvex_solve(oracle, inst.weights, f);
  throw std::invalid_argument("unknown solver: " + solver);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified r(a)-best optimization over weighted independence systems";

  py::class_<GapData>(m, "GapData")
      .def_property_readonly("frobenius", [](const GapData& d) { return d.frobenius; })
      .def_property_readonly("bound", [](const GapData& d) { return d.bound; })
      .def_property_readonly("gaps", [](const GapData& d) { return d.gap_values(); })
      .def_property_readonly("reachable", [](const GapData& d) { return d.reachable.values(); })
      .def("__repr__", [](const GapData& d) {
        return "GapData(frobenius=" + std::to_string(d.frobenius) + ", gaps=" +
               std::to_string(d.gaps.count()) + ")";
      });

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("n", [](const Instance& i) { return i.system.n(); })
      .def_property_readonly("name", [](const Instance& i) { return i.name; })
      .def_property_readonly("tuple", [](const Instance& i) { return i.weights.tuple().entries(); })
      .def_property_readonly("weights", [](const Instance& i) { return i.weights.weights(); })
      .def_property_readonly("objective_values",
                             [](const Instance& i) { return i.objective.values(); })
      .def("image", [](const Instance& i) { return image(i.system, i.weights).values(); })
      .def("contains",
           [](const Instance& i, const std::string& point) {
             return i.system.contains(GroundPoint::from_string(point));
           })
      .def("to_json", [](const Instance& i) { return instance_to_json(i).dump(2); })
      .def("__repr__", [](const Instance& i) {
        return "Instance(name='" + i.name + "', n=" + std::to_string(i.system.n()) + ")";
      });

  py::class_<SolveReport>(m, "SolveReport")
      .def_property_readonly("solution",
                             [](const SolveReport& r) { return r.solution.to_string(); })
      .def_property_readonly("support", [](const SolveReport& r) { return r.solution.support(); })
      .def_property_readonly("weight", [](const SolveReport& r) { return r.weight; })
      .def_property_readonly("guarantee", [](const SolveReport& r) { return r.guarantee; })
      .def_property_readonly("linear_queries",
                             [](const SolveReport& r) { return r.stats.linear_queries; })
      .def_property_readonly("comparison_queries",
                             [](const SolveReport& r) { return r.stats.comparison_queries; })
      .def("to_dict", [](const SolveReport& r) { return json_to_py(report_to_json(r)); })
      .def("__repr__", [](const SolveReport& r) {
        return "SolveReport(weight=" + std::to_string(r.weight) + ")";
      });

  // monoid operations
  m.def("gcd_tuple", &gcd_tuple, py::arg("entries"));
  m.def(
      "gap_data",
      [](const std::vector<int>& a, std::optional<int> bound) {
        return bound ? gap_data(tuple_of(a), *bound) : gap_data(tuple_of(a));
      },
      py::arg("tuple"), py::arg("bound") = std::nullopt);
  m.def("frobenius", [](const std::vector<int>& a) { return gap_data(tuple_of(a)).frobenius; },
        py::arg("tuple"));
  m.def("schur_bound", [](const std::vector<int>& a) { return schur_bound(tuple_of(a)); },
        py::arg("tuple"));
  m.def(
      "restricted_monoid",
      [](const std::vector<int>& a, const std::vector<int>& lam) {
        return restricted_monoid(tuple_of(a), lam).values();
      },
      py::arg("tuple"), py::arg("lam"));
  m.def(
      "is_saturated",
      [](const std::vector<int>& a, const std::vector<int>& lam) {
        return is_saturated(tuple_of(a), lam);
      },
      py::arg("tuple"), py::arg("lam"));
  m.def(
      "missing_saturation_values",
      [](const std::vector<int>& a, const std::vector<int>& lam) {
        return missing_saturation_values(tuple_of(a), lam);
      },
      py::arg("tuple"), py::arg("lam"));
  m.def(
      "block_subtuple",
      [](const std::vector<int>& a, const std::vector<int>& lam, const std::vector<int>& mu) {
        const BlockSubtuple sub = block_subtuple(tuple_of(a), lam, mu);
        return py::make_tuple(sub.indices, sub.entries);
      },
      py::arg("tuple"), py::arg("lam"), py::arg("mu"));
  m.def(
      "r_bound",
      [](const std::vector<int>& a, std::optional<std::vector<int>> lam) {
        return lam ? r_bound(tuple_of(a), *lam) : r_bound(tuple_of(a));
      },
      py::arg("tuple"), py::arg("lam") = std::nullopt);
  m.def(
      "g_bound",
      [](const std::vector<int>& a, std::optional<std::vector<int>> lam) {
        return lam ? g_bound(tuple_of(a), *lam) : g_bound(tuple_of(a));
      },
      py::arg("tuple"), py::arg("lam") = std::nullopt);

  // instances
  m.def("make_example_3_1", &make_example_3_1, py::arg("m"));
  m.def(
      "load_instance_json",
      [](const std::string& text) { return instance_from_json(nlohmann::json::parse(text)); },
      py::arg("text"));
  m.def("load_instance", &load_instance, py::arg("path"));
  m.def(
      "generate_instance",
      [](int n, const std::vector<int>& tuple, int generators, const std::string& objective,
         std::uint64_t seed) {
        GeneratorOptions options;
        options.n = n;
        options.tuple = tuple_of(tuple);
        options.generator_count = generators;
        options.seed = seed;
        if (objective == "identity") {
          options.objective = ObjectiveKind::kIdentity;
        } else if (objective == "convex") {
          options.objective = ObjectiveKind::kConvex;
        } else if (objective == "random") {
          options.objective = ObjectiveKind::kRandomTable;
        } else {
          throw std::invalid_argument("unknown objective kind: " + objective);
        }
        return generate_instance(options);
      },
      py::arg("n"), py::arg("tuple"), py::arg("generators") = 4, py::arg("objective") = "random",
      py::arg("seed") = 0);

  // solvers and verification
  m.def("solve", &dispatch, py::arg("instance"), py::arg("solver") = "main",
        py::arg("lam") = std::nullopt);
  m.def(
      "certify",
      [](const SolveReport& report, const Instance& inst) {
        return json_to_py(certificate_to_json(certify_rank(report, inst)));
      },
      py::arg("report"), py::arg("instance"));
  m.def(
      "brute_force_solve",
      [](const Instance& inst) {
        const BruteForceResult result = brute_force_solve(inst);
        return py::make_tuple(result.min_value, result.image.values(), result.distinct_values);
      },
      py::arg("instance"));
  m.def(
      "compute_Y",
      [](int m, const std::vector<int>& c) {
        const LowerBoundFamily family(m);
        return compute_Y(family, c);
      },
      py::arg("m"), py::arg("c"));
  m.def(
      "adversary_run",
      [](const std::string& family, int m, const std::string& solver, bool include_queries) {
        AdversaryTranscript transcript;
        if (family == "lower_bound") {
          transcript = adversary_run(make_linear_algorithm(solver, m), m);
        } else if (family == "membership") {
          transcript = adversary_membership_run(make_membership_algorithm(solver, m), m);
        } else {
          throw std::invalid_argument("unknown adversary family: " + family);
        }
        return json_to_py(transcript_to_json(transcript, include_queries));
      },
      py::arg("family"), py::arg("m"), py::arg("solver"), py::arg("include_queries") = false);
}
