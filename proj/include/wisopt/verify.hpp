#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wisopt/families.hpp"
#include "wisopt/instance.hpp"
#include "wisopt/oracles.hpp"
#include "wisopt/solver.hpp"

namespace wisopt {

// Ground truth by enumeration; the oracle for every correctness test.
struct BruteForceResult {
  IntSet image;                        // w·S
  double min_value = 0.0;              // min f over w·S
  std::vector<double> distinct_values;  // sorted distinct f values over w·S
};
BruteForceResult brute_force_solve(const Instance& instance);

// True rank of a solver output: distinct f values over the image strictly
// below the output's value.
struct RankCertificate {
  std::string instance;
  double value = 0.0;
  std::vector<double> better_values;
  long long rank = 0;
  std::optional<long long> guarantee;
  bool within_guarantee = true;
};
RankCertificate certify_rank(const SolveReport& report, const Instance& instance);

// Y(c) = {y ∈ T_1 : cy > max{cx : x ∈ S}} as T_1 indices; checks the
// cardinality bound C(2m, m-1) internally.
std::vector<std::size_t> compute_Y(const LowerBoundFamily& family, const std::vector<int>& c);

// What an algorithm under the adversary commits to about the distinguishing
// image value (5m-1 for the linear family, m for the membership family).
enum class ImageClaim { kPresent, kAbsent, kUndecided };

struct LinearQueryRecord {
  std::vector<int> vector;
  GroundPoint answer;
  long long max_value = 0;  // max over S of the queried functional
};

struct MembershipQueryRecord {
  GroundPoint point;
  bool answer = false;
};

struct AdversaryTranscript {
  std::string family;
  int m = 0;
  std::vector<LinearQueryRecord> linear_queries;
  std::vector<MembershipQueryRecord> membership_queries;
  long long query_count = 0;
  long long threshold = 0;      // queries needed to pin down the instance
  int distinguishing_value = 0;
  std::size_t candidate_count = 0;  // |T_1|, resp. C(2m, m)
  std::size_t surviving_y = 0;      // candidates consistent with every answer
  ImageClaim claim = ImageClaim::kUndecided;
  bool fooled = false;  // surviving_y >= 1 and the algorithm committed
};

using LinearAlgorithm = std::function<ImageClaim(LinearOracle&, const WeightVector&)>;
using MembershipAlgorithm = std::function<ImageClaim(MembershipOracle&, const WeightVector&)>;

// Runs the algorithm against the lower-bound family's adversary: every query
// is answered with the lexicographically smallest S-maximizer, so the answers
// are simultaneously consistent with S and with every surviving S_y.
AdversaryTranscript adversary_run(const LinearAlgorithm& algorithm, int m);

// Same for the membership family; a candidate y survives unless queried.
AdversaryTranscript adversary_membership_run(const MembershipAlgorithm& algorithm, int m);

// Named algorithm rosters used by the CLI and the experiments.
// Linear: main, naive, quasiconvex, image-claim, probe[:k], none.
// Membership: exhaustive, partial, none.
LinearAlgorithm make_linear_algorithm(const std::string& name, int m,
                                      SolveReport* captured_report = nullptr);
MembershipAlgorithm make_membership_algorithm(const std::string& name, int m);

}  // namespace wisopt
