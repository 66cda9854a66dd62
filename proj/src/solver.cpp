#include "wisopt/solver.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "wisopt/families.hpp"

namespace wisopt {

namespace {

// Advances an odometer 0 <= nu <= cap in lexicographic order (last index
// fastest); returns false after the final tuple.
bool advance(MultiIndex& nu, const MultiIndex& cap) {
  for (std::size_t i = nu.size(); i-- > 0;) {
    if (nu[i] < cap[i]) {
      ++nu[i];
      std::fill(nu.begin() + static_cast<std::ptrdiff_t>(i) + 1, nu.end(), 0);
      return true;
    }
  }
  return false;
}

}  // namespace

GroundPoint naive_min_under(const GroundPoint& xbar, const WeightVector& w, ComparisonOracle& f) {
  const MultiIndex tau = w.lambda_of(xbar);
  const int p = w.tuple().size();

  // supp(xbar) ∩ N_i, lowest indices first
  std::vector<std::vector<int>> in_support(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    for (int j : w.class_members(i)) {
      if (xbar.get(j)) in_support[static_cast<std::size_t>(i)].push_back(j);
    }
  }

  MultiIndex nu(static_cast<std::size_t>(p), 0);
  MultiIndex best_nu = nu;
  int best_weight = 0;
  bool first = true;
  do {
    const int weight = static_cast<int>(dot(nu, w.tuple()));
    if (first) {
      best_nu = nu;
      best_weight = weight;
      first = false;
    } else if (f.compare(weight, best_weight) == Ordering::kLess) {
      best_nu = nu;
      best_weight = weight;
    }
  } while (advance(nu, tau));

  GroundPoint x(xbar.size());
  for (int i = 0; i < p; ++i) {
    for (int k = 0; k < best_nu[static_cast<std::size_t>(i)]; ++k) {
      x.set(in_support[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], true);
    }
  }
  return x;
}

std::optional<GroundPoint> face_maximize(LinearOracle& oracle, const std::vector<int>& weights,
                                         const FaceSpec& face) {
  const int n = static_cast<int>(weights.size());
  std::vector<char> in_lower(static_cast<std::size_t>(n), 0);
  for (int j : face.lower) {
    if (j < 0 || j >= n) throw std::invalid_argument("face index out of range");
    in_lower[static_cast<std::size_t>(j)] = 1;
  }
  for (int j : face.upper) {
    if (j < 0 || j >= n) throw std::invalid_argument("face index out of range");
    if (in_lower[static_cast<std::size_t>(j)]) {
      throw std::invalid_argument("face index sets overlap");
    }
  }

  int max_abs = 0;
  for (int wj : weights) max_abs = std::max(max_abs, std::abs(wj));
  const long long alpha = 1 + 2LL * n * max_abs;
  if (alpha > INT_MAX / 4) throw std::runtime_error("weights too large for face reduction");

  std::vector<int> v = weights;
  for (int j : face.upper) v[static_cast<std::size_t>(j)] += static_cast<int>(alpha);
  for (int j : face.lower) v[static_cast<std::size_t>(j)] -= static_cast<int>(alpha);

  const GroundPoint x = oracle.maximize(v);
  const long long value = x.dot(v) - static_cast<long long>(face.upper.size()) * alpha;
  // alpha is odd, so value = -alpha/2 is unattainable for integral value.
  if (2 * value == -alpha) {
    throw std::logic_error("face reduction hit the impossible half-threshold");
  }
  if (2 * value < -alpha) return std::nullopt;

  for (int j : face.lower) {
    if (x.get(j)) throw std::logic_error("face maximizer violates a lower pin");
  }
  for (int j : face.upper) {
    if (!x.get(j)) throw std::logic_error("face maximizer violates an upper pin");
  }
  return x;
}

namespace {

// Iterates all per-class subset choices S_i ⊆ N_i, |S_i| = mu_i, invoking
// fn(L, U) with L = ∪_{i: mu_i < lam_i} (N_i \ S_i) and U = ∪ S_i.
// Returns the number of choices visited.
long long for_each_block_face(const WeightVector& w, const BlockSpec& block,
                              const std::function<void(const FaceSpec&)>& fn) {
  const int p = w.tuple().size();
  std::vector<std::vector<std::vector<int>>> choices(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    choices[static_cast<std::size_t>(i)] =
        combinations(w.class_members(i), block.mu[static_cast<std::size_t>(i)]);
    if (choices[static_cast<std::size_t>(i)].empty()) return 0;  // mu_i > |N_i|
  }

  long long visited = 0;
  std::vector<std::size_t> pick(static_cast<std::size_t>(p), 0);
  for (;;) {
    FaceSpec face;
    for (int i = 0; i < p; ++i) {
      const auto& chosen = choices[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
      face.upper.insert(face.upper.end(), chosen.begin(), chosen.end());
      if (block.mu[static_cast<std::size_t>(i)] < block.lam[static_cast<std::size_t>(i)]) {
        for (int j : w.class_members(i)) {
          if (std::find(chosen.begin(), chosen.end(), j) == chosen.end()) {
            face.lower.push_back(j);
          }
        }
      }
    }
    fn(face);
    ++visited;

    bool advanced = false;
    std::size_t i = pick.size();
    while (i-- > 0) {
      if (++pick[i] < choices[i].size()) {
        advanced = true;
        break;
      }
      pick[i] = 0;
    }
    if (!advanced) return visited;
  }
}

}  // namespace

std::optional<GroundPoint> block_maximize(LinearOracle& oracle, const WeightVector& w,
                                          const BlockSpec& block) {
  const int p = w.tuple().size();
  if (static_cast<int>(block.lam.size()) != p || static_cast<int>(block.mu.size()) != p) {
    throw std::invalid_argument("block index length mismatch");
  }
  for (int v : block.mu) {
    if (v < 0) throw std::invalid_argument("mu must be nonnegative");
  }
  if (!leq(block.mu, block.lam)) throw std::invalid_argument("mu not componentwise <= lambda");

  std::optional<GroundPoint> best;
  int best_weight = 0;
  for_each_block_face(w, block, [&](const FaceSpec& face) {
    const auto x = face_maximize(oracle, w.weights(), face);
    if (!x) return;
    const int weight = w.weight_of(*x);
    if (!best || weight > best_weight) {
      best = *x;
      best_weight = weight;
    }
  });
  return best;
}

long long linear_query_budget(const WeightVector& w, const MultiIndex& lam) {
  // sum over mu <= lambda of prod_i C(|N_i|, mu_i) = prod_i sum_{k <= lambda_i} C(|N_i|, k)
  long long budget = 1;
  for (int i = 0; i < w.tuple().size(); ++i) {
    long long class_sum = 0;
    const int size = static_cast<int>(w.class_members(i).size());
    for (int k = 0; k <= lam[static_cast<std::size_t>(i)]; ++k) {
      class_sum += static_cast<long long>(binomial(size, k));
    }
    budget *= class_sum;
  }
  return budget;
}

SolveReport r_best_solve(LinearOracle& oracle, const WeightVector& w, ComparisonOracle& f,
                         std::optional<MultiIndex> lam) {
  const PrimitiveTuple& a = w.tuple();
  const MultiIndex lambda = lam ? std::move(*lam) : default_lambda(a);
  if (static_cast<int>(lambda.size()) != a.size()) {
    throw std::invalid_argument("lambda length mismatch");
  }
  for (int l : lambda) {
    // the saturation theorem behind the guarantee needs lambda_i >= max(a)
    if (l < a.max_entry()) {
      throw std::invalid_argument("lambda override must be at least max(a) componentwise");
    }
  }

  const long long linear_before = oracle.queries();
  const long long comparison_before = f.queries();

  SolveReport report;
  bool have_best = false;
  int best_weight = 0;

  MultiIndex mu(lambda.size(), 0);
  bool more = true;
  while (more) {
    const auto x_mu = block_maximize(oracle, w, BlockSpec{lambda, mu});
    if (x_mu) {
      const long long comparisons_before = f.queries();
      GroundPoint x_star = naive_min_under(*x_mu, w, f);
      const long long comparisons = f.queries() - comparisons_before;
      const int weight = w.weight_of(x_star);

      if (!have_best) {
        report.solution = x_star;
        best_weight = weight;
        have_best = true;
      } else if (f.compare(weight, best_weight) == Ordering::kLess) {
        report.solution = x_star;
        best_weight = weight;
      }
      report.per_block.push_back(BlockDiagnostic{mu, *x_mu, std::move(x_star), comparisons});
    }
    more = advance(mu, lambda);
  }

  if (!have_best) throw std::logic_error("no block produced a candidate (S must contain 0)");

  report.weight = best_weight;
  report.guarantee = r_bound(a, lambda);
  report.stats.linear_queries = oracle.queries() - linear_before;
  report.stats.comparison_queries = f.queries() - comparison_before;

  if (report.stats.linear_queries > linear_query_budget(w, lambda)) {
    throw std::logic_error("linear oracle budget exceeded");
  }
  return report;
}

SolveReport naive_solve(LinearOracle& oracle, const WeightVector& w, ComparisonOracle& f) {
  const long long linear_before = oracle.queries();
  const long long comparison_before = f.queries();

  const GroundPoint xbar = oracle.maximize(w.weights());
  GroundPoint x_star = naive_min_under(xbar, w, f);

  SolveReport report;
  report.weight = w.weight_of(x_star);
  report.per_block.push_back(
      BlockDiagnostic{w.lambda_of(xbar), xbar, x_star, f.queries() - comparison_before});
  report.solution = std::move(x_star);
  report.stats.linear_queries = oracle.queries() - linear_before;
  report.stats.comparison_queries = f.queries() - comparison_before;
  return report;
}

SolveReport quasiconvex_solve(LinearOracle& oracle, const WeightVector& w, ComparisonOracle& f) {
  const long long linear_before = oracle.queries();
  const long long comparison_before = f.queries();

  const GroundPoint top = oracle.maximize(w.weights());

  // x^k = top >= ... >= x^0 = 0, dropping the highest support index first;
  // stored low weight first.
  std::vector<GroundPoint> chain;
  GroundPoint current = top;
  chain.push_back(current);
  while (!current.is_zero()) {
    const auto support = current.support();
    current = current.without(support.back());
    chain.push_back(current);
  }
  std::reverse(chain.begin(), chain.end());

  std::size_t best_index = 0;
  int best_weight = w.weight_of(chain.front());
  for (std::size_t t = 1; t < chain.size(); ++t) {
    const int weight = w.weight_of(chain[t]);
    if (f.compare(weight, best_weight) == Ordering::kLess) {
      best_index = t;
      best_weight = weight;
    }
  }

  SolveReport report;
  report.solution = chain[best_index];
  report.weight = best_weight;
  report.guarantee = std::max(w.tuple().max_entry(), 1) - 1;
  report.chain = std::move(chain);
  report.stats.linear_queries = oracle.queries() - linear_before;
  report.stats.comparison_queries = f.queries() - comparison_before;
  return report;
}

}  // namespace wisopt
