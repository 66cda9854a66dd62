#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wisopt/generate.hpp"
#include "wisopt/instance_io.hpp"
#include "wisopt/report_io.hpp"
#include "wisopt/verify.hpp"

namespace {

using nlohmann::json;
using namespace wisopt;

struct SolveOptions {
  std::string instance_path;
  std::string family;
  int m = 2;
  std::vector<int> tuple_override;
  std::vector<int> lam_override;
  std::string solver = "main";
  bool verify = false;
  std::string format = "text";
};

void print_point_line(const GroundPoint& p) {
  std::cout << "solution: " << p.to_string() << "\n";
  std::cout << "support:";
  for (int j : p.support()) std::cout << " " << j + 1;
  std::cout << "\n";
}

Instance load_for_solve(const SolveOptions& opt) {
  if (opt.instance_path.empty() && opt.family.empty()) {
    throw std::invalid_argument("one of --instance or --family is required");
  }
  Instance inst = opt.instance_path.empty()
                      ? instance_from_json(json{{"family", opt.family}, {"m", opt.m}})
                      : load_instance(opt.instance_path);
  if (!opt.tuple_override.empty()) {
    // must match the instance weights exactly
    inst = Instance{inst.system,
                    WeightVector(inst.weights.weights(), PrimitiveTuple(opt.tuple_override)),
                    inst.objective, inst.name};
  }
  return inst;
}

SolveReport dispatch_solver(const std::string& solver, const Instance& inst,
                            const std::vector<int>& lam_override) {
  SystemLinearOracle oracle(inst.system);
  TableComparisonOracle f(inst.objective);
  if (solver == "main") {
    std::optional<MultiIndex> lam;
    if (!lam_override.empty()) lam = lam_override;
    return r_best_solve(oracle, inst.weights, f, lam);
  }
  if (solver == "naive") return naive_solve(oracle, inst.weights, f);
  if (solver == "quasiconvex") return quasiconvex_solve(oracle, inst.weights, f);
  throw std::invalid_argument("unknown solver: " + solver);
}

int run_solve(const SolveOptions& opt, bool always_verify) {
  const Instance inst = load_for_solve(opt);
  const SolveReport report = dispatch_solver(opt.solver, inst, opt.lam_override);
  const bool with_certificate = opt.verify || always_verify;

  if (opt.format == "json") {
    json doc = report_to_json(report);
    doc["instance"] = inst.name;
    doc["solver"] = opt.solver;
    if (with_certificate) doc["certificate"] = certificate_to_json(certify_rank(report, inst));
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "instance: " << inst.name << "\n";
  std::cout << "solver: " << opt.solver << "\n";
  print_point_line(report.solution);
  std::cout << "weight: " << report.weight << "\n";
  if (report.guarantee) {
    std::cout << "guarantee: " << *report.guarantee << "-best\n";
  } else {
    std::cout << "guarantee: none\n";
  }
  std::cout << "linear queries: " << report.stats.linear_queries
            << "\ncomparison queries: " << report.stats.comparison_queries << "\n";
  if (with_certificate) {
    const RankCertificate cert = certify_rank(report, inst);
    std::cout << "value: " << cert.value << "\n";
    std::cout << "rank: " << cert.rank;
    if (cert.guarantee) {
      std::cout << (cert.within_guarantee ? " (within guarantee)" : " (EXCEEDS GUARANTEE)");
    }
    std::cout << "\n";
    std::cout << "better values:";
    for (double v : cert.better_values) std::cout << " " << v;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified r(a)-best optimization over weighted independence systems"};
  app.require_subcommand(1);

  std::vector<int> tuple_args;
  std::optional<int> bound_arg;
  std::vector<int> lam_args;
  std::string format = "text";

  auto* frobenius_cmd =
      app.add_subcommand("frobenius", "Frobenius number and gap summary of a tuple");
  frobenius_cmd->add_option("tuple", tuple_args, "tuple entries, e.g. 3 5")->required();
  frobenius_cmd->add_option("--format", format, "text|json");

  auto* gapset_cmd = app.add_subcommand("gapset", "Gap set, reachable values and saturation checks");
  gapset_cmd->add_option("tuple", tuple_args, "tuple entries")->required();
  gapset_cmd->add_option("--bound", bound_arg, "window bound (defaults to an exact window)");
  gapset_cmd->add_option("--lam", lam_args, "restriction lambda (comma separated)")->delimiter(',');
  gapset_cmd->add_option("--format", format, "text|json");

  SolveOptions solve_opt;
  auto add_solve_flags = [&](CLI::App* cmd) {
    auto* path = cmd->add_option("--instance", solve_opt.instance_path, "instance JSON file");
    auto* family = cmd->add_option("--family", solve_opt.family,
                                   "named family: example_3_1|lower_bound|membership");
    cmd->add_option("--m", solve_opt.m, "family size parameter");
    family->excludes(path);
    path->excludes(family);
    cmd->add_option("--tuple", solve_opt.tuple_override, "tuple override (must match the weights)")
        ->delimiter(',');
    cmd->add_option("--lam", solve_opt.lam_override, "block grid override for the main solver")
        ->delimiter(',');
    cmd->add_option("--solver", solve_opt.solver, "main|naive|quasiconvex");
    cmd->add_option("--format", solve_opt.format, "text|json");
  };
  auto* solve_cmd = app.add_subcommand("solve", "Run a solver on an instance");
  add_solve_flags(solve_cmd);
  solve_cmd->add_flag("--verify", solve_opt.verify, "append a brute-force rank certificate");
  auto* verify_cmd = app.add_subcommand("verify", "Run a solver and certify its rank");
  add_solve_flags(verify_cmd);

  std::string adversary_family = "lower_bound";
  int adversary_m = 2;
  std::string adversary_solver = "main";
  bool include_queries = false;
  auto* adversary_cmd =
      app.add_subcommand("adversary", "Run a solver against the oracle adversary");
  adversary_cmd->add_option("--family", adversary_family, "lower_bound|membership")->required();
  adversary_cmd->add_option("--m", adversary_m, "family size parameter")->required();
  adversary_cmd->add_option("--solver", adversary_solver,
                            "lower_bound: main|naive|quasiconvex|image-claim|probe[:k]|none; "
                            "membership: exhaustive|partial|none");
  adversary_cmd->add_flag("--queries", include_queries, "include the full query list (json)");
  adversary_cmd->add_option("--format", format, "text|json");

  GeneratorOptions gen_opt;
  std::vector<int> gen_tuple = {2, 3};
  std::string gen_objective = "random";
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a seeded random instance");
  gen_cmd->add_option("--n", gen_opt.n, "ground set size");
  gen_cmd->add_option("--tuple", gen_tuple, "weight tuple")->delimiter(',');
  gen_cmd->add_option("--generators", gen_opt.generator_count, "number of random generators");
  gen_cmd->add_option("--seed", gen_opt.seed, "RNG seed")->required();
  gen_cmd->add_option("--objective", gen_objective, "random|identity|convex");
  gen_cmd->add_option("-o,--output", gen_output, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: usage: " << e.what() << "\n";
    return e.get_exit_code();
  }

  try {
    if (frobenius_cmd->parsed() || gapset_cmd->parsed()) {
      const PrimitiveTuple tuple(tuple_args);
      const GapData data = bound_arg ? gap_data(tuple, *bound_arg) : gap_data(tuple);
      if (format == "json") {
        json doc = gap_data_to_json(data);
        if (gapset_cmd->parsed()) {
          doc["reachable"] = data.reachable.values();
          if (!lam_args.empty()) {
            doc["lambda"] = lam_args;
            doc["restricted_monoid"] = restricted_monoid(tuple, lam_args).values();
            doc["missing"] = missing_saturation_values(tuple, lam_args);
            doc["saturated"] = is_saturated(tuple, lam_args);
          }
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
      }
      std::cout << "tuple:";
      for (int e : tuple.entries()) std::cout << " " << e;
      std::cout << "\nfrobenius: " << data.frobenius << "\n";
      std::cout << "gap count: " << data.gaps.count() << "\n";
      std::cout << "gaps:";
      for (int v : data.gap_values()) std::cout << " " << v;
      std::cout << "\nschur bound: " << schur_bound(tuple) << "\n";
      std::cout << "window: [0, " << data.bound << "]\n";
      if (gapset_cmd->parsed()) {
        std::cout << "reachable:";
        for (int v : data.reachable.values()) std::cout << " " << v;
        std::cout << "\n";
        if (!lam_args.empty()) {
          std::cout << "lambda:";
          for (int l : lam_args) std::cout << " " << l;
          const IntSet monoid = restricted_monoid(tuple, lam_args);
          std::cout << "\nrestricted monoid:";
          for (int v : monoid.values()) std::cout << " " << v;
          const auto missing = missing_saturation_values(tuple, lam_args);
          std::cout << "\nmissing:";
          for (int v : missing) std::cout << " " << v;
          std::cout << "\nsaturated: " << (missing.empty() ? "true" : "false") << "\n";
        }
      }
      return 0;
    }

    if (solve_cmd->parsed()) return run_solve(solve_opt, /*always_verify=*/false);
    if (verify_cmd->parsed()) return run_solve(solve_opt, /*always_verify=*/true);

    if (adversary_cmd->parsed()) {
      AdversaryTranscript transcript;
      if (adversary_family == "lower_bound") {
        transcript =
            adversary_run(make_linear_algorithm(adversary_solver, adversary_m), adversary_m);
      } else if (adversary_family == "membership") {
        transcript = adversary_membership_run(
            make_membership_algorithm(adversary_solver, adversary_m), adversary_m);
      } else {
        throw std::invalid_argument("unknown adversary family: " + adversary_family);
      }
      if (format == "json") {
        std::cout << transcript_to_json(transcript, include_queries).dump(2) << "\n";
        return 0;
      }
      std::cout << "family: " << transcript.family << " (m=" << transcript.m << ")\n";
      std::cout << "solver: " << adversary_solver << "\n";
      std::cout << "queries: " << transcript.query_count << "\n";
      std::cout << "threshold: " << transcript.threshold << "\n";
      std::cout << "candidates: " << transcript.candidate_count << "\n";
      std::cout << "surviving: " << transcript.surviving_y << "\n";
      std::cout << "claim: "
                << (transcript.claim == ImageClaim::kPresent    ? "present"
                    : transcript.claim == ImageClaim::kAbsent ? "absent"
                                                              : "undecided")
                << "\n";
      std::cout << "fooled: " << (transcript.fooled ? "true" : "false") << "\n";
      return 0;
    }

    if (gen_cmd->parsed()) {
      gen_opt.tuple = PrimitiveTuple(gen_tuple);
      if (gen_objective == "identity") {
        gen_opt.objective = ObjectiveKind::kIdentity;
      } else if (gen_objective == "convex") {
        gen_opt.objective = ObjectiveKind::kConvex;
      } else if (gen_objective == "random") {
        gen_opt.objective = ObjectiveKind::kRandomTable;
      } else {
        throw std::invalid_argument("unknown objective kind: " + gen_objective);
      }
      const Instance inst = generate_instance(gen_opt);
      if (gen_output.empty()) {
        std::cout << instance_to_json(inst).dump(2) << "\n";
      } else {
        save_instance(inst, gen_output);
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid-input: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "error: internal-error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: runtime-error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
