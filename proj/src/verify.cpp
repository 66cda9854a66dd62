#include "wisopt/verify.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

#include "wisopt/generate.hpp"

namespace wisopt {

BruteForceResult brute_force_solve(const Instance& instance) {
  BruteForceResult result;
  result.image = image(instance.system, instance.weights);

  std::vector<double> values;
  for (int v : result.image.values()) values.push_back(instance.objective.at(v));
  if (values.empty()) throw std::logic_error("image of a nonempty system is empty");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  result.min_value = values.front();
  result.distinct_values = std::move(values);
  return result;
}

RankCertificate certify_rank(const SolveReport& report, const Instance& instance) {
  const BruteForceResult truth = brute_force_solve(instance);

  RankCertificate cert;
  cert.instance = instance.name;
  cert.value = instance.objective.at(report.weight);
  for (double v : truth.distinct_values) {
    if (v < cert.value) cert.better_values.push_back(v);
  }
  cert.rank = static_cast<long long>(cert.better_values.size());
  cert.guarantee = report.guarantee;
  cert.within_guarantee = !cert.guarantee || cert.rank <= *cert.guarantee;
  return cert;
}

std::vector<std::size_t> compute_Y(const LowerBoundFamily& family, const std::vector<int>& c) {
  const GroundPoint maximizer = family.system().maximize(c);
  const long long s_max = maximizer.dot(c);

  std::vector<std::size_t> ys;
  for (std::size_t idx = 0; idx < family.t1_size(); ++idx) {
    if (family.t1_member(idx).dot(c) > s_max) ys.push_back(idx);
  }
  const auto bound = binomial(2 * family.m(), family.m() - 1);
  if (ys.size() > bound) {
    throw std::logic_error("Y(c) exceeds the C(2m, m-1) bound");
  }
  return ys;
}

namespace {

class RecordingLinearOracle final : public LinearOracle {
 public:
  explicit RecordingLinearOracle(const IndependenceSystem& system) : system_(&system) {}

  const std::vector<LinearQueryRecord>& records() const { return records_; }

 private:
  GroundPoint do_maximize(const std::vector<int>& v) override {
    GroundPoint answer = system_->maximize(v);
    const long long value = answer.dot(v);
    records_.push_back(LinearQueryRecord{v, answer, value});
    return records_.back().answer;
  }

  const IndependenceSystem* system_;
  std::vector<LinearQueryRecord> records_;
};

class RecordingMembershipOracle final : public MembershipOracle {
 public:
  explicit RecordingMembershipOracle(const IndependenceSystem& system) : system_(&system) {}

  const std::vector<MembershipQueryRecord>& records() const { return records_; }

 private:
  bool do_contains(const GroundPoint& x) override {
    const bool answer = system_->contains(x);
    records_.push_back(MembershipQueryRecord{x, answer});
    return answer;
  }

  const IndependenceSystem* system_;
  std::vector<MembershipQueryRecord> records_;
};

}  // namespace

AdversaryTranscript adversary_run(const LinearAlgorithm& algorithm, int m) {
  const LowerBoundFamily family(m);
  RecordingLinearOracle oracle(family.system());

  AdversaryTranscript transcript;
  transcript.family = "lower_bound";
  transcript.m = m;
  transcript.threshold = family.query_threshold();
  transcript.distinguishing_value = family.distinguishing_value();
  transcript.candidate_count = family.t1_size();

  transcript.claim = algorithm(oracle, family.weights());
  transcript.linear_queries = oracle.records();
  transcript.query_count = oracle.queries();

  for (std::size_t idx = 0; idx < family.t1_size(); ++idx) {
    const GroundPoint y = family.t1_member(idx);
    bool survives = true;
    for (const auto& record : transcript.linear_queries) {
      if (y.dot(record.vector) > record.max_value) {
        survives = false;
        break;
      }
    }
    if (survives) ++transcript.surviving_y;
  }

  transcript.fooled = transcript.claim != ImageClaim::kUndecided && transcript.surviving_y >= 1;
  return transcript;
}

AdversaryTranscript adversary_membership_run(const MembershipAlgorithm& algorithm, int m) {
  const MembershipFamily family(m);
  RecordingMembershipOracle oracle(family.system());

  AdversaryTranscript transcript;
  transcript.family = "membership";
  transcript.m = m;
  transcript.threshold = family.query_threshold();
  transcript.distinguishing_value = family.distinguishing_value();
  transcript.candidate_count = family.y_count();

  transcript.claim = algorithm(oracle, family.weights());
  transcript.membership_queries = oracle.records();
  transcript.query_count = oracle.queries();

  for (std::size_t idx = 0; idx < family.y_count(); ++idx) {
    const GroundPoint y = family.y_member(idx);
    bool survives = true;
    for (const auto& record : transcript.membership_queries) {
      if (record.point == y) {
        survives = false;
        break;
      }
    }
    if (survives) ++transcript.surviving_y;
  }

  transcript.fooled = transcript.claim != ImageClaim::kUndecided && transcript.surviving_y >= 1;
  return transcript;
}

namespace {

// Weights reachable under xbar: the subset sums of its support weights.
IntSet weights_under(const GroundPoint& xbar, const WeightVector& w) {
  const int total = w.weight_of(xbar);
  std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
  reach[0] = true;
  for (int j : xbar.support()) {
    const int wj = w.weights()[static_cast<std::size_t>(j)];
    for (int v = total; v >= wj; --v) {
      if (reach[static_cast<std::size_t>(v - wj)]) reach[static_cast<std::size_t>(v)] = true;
    }
  }
  IntSet out(total);
  for (int v = 0; v <= total; ++v) {
    if (reach[static_cast<std::size_t>(v)]) out.insert(v);
  }
  return out;
}

}  // namespace

LinearAlgorithm make_linear_algorithm(const std::string& name, int m, SolveReport* captured_report) {
  const LowerBoundFamily family(m);
  const int distinguishing = family.distinguishing_value();
  const long long threshold = family.query_threshold();
  const int max_weight = 5 * m;

  if (name == "main" || name == "naive" || name == "quasiconvex") {
    auto table = std::make_shared<ObjectiveTable>(ObjectiveTable::identity(max_weight));
    return [name, table, captured_report](LinearOracle& oracle, const WeightVector& w) {
      TableComparisonOracle f(*table);
      SolveReport report;
      if (name == "main") {
        report = r_best_solve(oracle, w, f);
      } else if (name == "naive") {
        report = naive_solve(oracle, w, f);
      } else {
        report = quasiconvex_solve(oracle, w, f);
      }
      if (captured_report) *captured_report = report;
      return ImageClaim::kUndecided;  // these solvers never commit to the image
    };
  }
  if (name == "image-claim") {
    // One query, then commits to whatever the naive image approximation says
    // about the distinguishing value; the adversary argument fools it.
    return [distinguishing](LinearOracle& oracle, const WeightVector& w) {
      const GroundPoint xbar = oracle.maximize(w.weights());
      return weights_under(xbar, w).contains(distinguishing) ? ImageClaim::kPresent
                                                             : ImageClaim::kAbsent;
    };
  }
  if (name == "probe" || name.rfind("probe:", 0) == 0) {
    long long budget = threshold - 1;
    if (name.rfind("probe:", 0) == 0) budget = std::stoll(name.substr(6));
    return [budget, distinguishing](LinearOracle& oracle, const WeightVector& w) {
      std::mt19937_64 rng(20240531);
      bool seen = false;
      for (long long q = 0; q < budget; ++q) {
        std::vector<int> c(static_cast<std::size_t>(w.n()));
        for (auto& cj : c) cj = static_cast<int>(uniform_below(rng, 11)) - 5;
        const GroundPoint answer = oracle.maximize(c);
        if (w.weight_of(answer) == distinguishing) seen = true;
      }
      return seen ? ImageClaim::kPresent : ImageClaim::kAbsent;
    };
  }
  if (name == "none") {
    return [](LinearOracle&, const WeightVector&) { return ImageClaim::kUndecided; };
  }
  throw std::invalid_argument("unknown adversary solver: " + name);
}

MembershipAlgorithm make_membership_algorithm(const std::string& name, int m) {
  const MembershipFamily family(m);
  const std::size_t count = family.y_count();

  if (name == "exhaustive" || name == "partial") {
    const std::size_t to_query = name == "exhaustive" ? count : count - 1;
    std::vector<GroundPoint> targets;
    for (std::size_t idx = 0; idx < to_query; ++idx) targets.push_back(family.y_member(idx));
    return [targets](MembershipOracle& oracle, const WeightVector&) {
      bool seen = false;
      for (const auto& y : targets) {
        if (oracle.contains(y)) seen = true;
      }
      return seen ? ImageClaim::kPresent : ImageClaim::kAbsent;
    };
  }
  if (name == "none") {
    return [](MembershipOracle&, const WeightVector&) { return ImageClaim::kUndecided; };
  }
  throw std::invalid_argument("unknown adversary solver: " + name);
}

}  // namespace wisopt
