#pragma once

#include <optional>
#include <vector>

#include "wisopt/instance.hpp"
#include "wisopt/monoid.hpp"
#include "wisopt/oracles.hpp"
#include "wisopt/point.hpp"

namespace wisopt {

// Face S^U_L = {x ∈ S : x_j = 0 for j ∈ L, x_j = 1 for j ∈ U}.
struct FaceSpec {
  std::vector<int> lower;  // L, pinned to 0
  std::vector<int> upper;  // U, pinned to 1
};

// Block S^lambda_mu: classes with mu_i < lambda_i have exactly mu_i support
// elements, classes with mu_i = lambda_i have at least mu_i.
struct BlockSpec {
  MultiIndex lam;
  MultiIndex mu;
};

struct BlockDiagnostic {
  MultiIndex mu;
  GroundPoint maximizer;   // x_mu, block weight maximizer
  GroundPoint minimizer;   // x*_mu, comparison minimum under x_mu
  long long comparisons = 0;
};

struct SolveReport {
  GroundPoint solution;
  int weight = 0;
  // r_bound(a) for the main solver, max(a)-1 for the quasiconvex solver,
  // absent for the naive strategy (no guarantee exists).
  std::optional<long long> guarantee;
  OracleStats stats;
  std::vector<BlockDiagnostic> per_block;
  std::vector<GroundPoint> chain;  // quasiconvex descent path, low weight first
};

// min{f(wx) : x <= xbar} by comparing the canonical point of every nu <= tau,
// tau = lambda(xbar); each x_nu keeps the nu_i lowest-indexed support
// elements per class. At most prod(tau_i + 1) comparisons.
GroundPoint naive_min_under(const GroundPoint& xbar, const WeightVector& w, ComparisonOracle& f);

// max{wx : x ∈ S^U_L} with a single oracle query on w + alpha(1_U - 1_L),
// alpha = 1 + 2n max|w_j|; nullopt when the face is empty.
std::optional<GroundPoint> face_maximize(LinearOracle& oracle, const std::vector<int>& weights,
                                         const FaceSpec& face);

// max{wx : x ∈ S^lambda_mu} by sweeping all per-class subset pins; at most
// prod C(|N_i|, mu_i) oracle queries, nullopt when the block is empty.
std::optional<GroundPoint> block_maximize(LinearOracle& oracle, const WeightVector& w,
                                          const BlockSpec& block);

// Upper bound on the linear queries of r_best_solve:
// sum over mu <= lambda of prod C(|N_i|, mu_i).
long long linear_query_budget(const WeightVector& w, const MultiIndex& lam);

// The main algorithm: per block mu <= lambda (lambda_i = max(a) by default),
// maximize wx over the block, then take the comparison minimum under the
// block maximizer; the overall comparison minimum is r_bound(a)-best.
SolveReport r_best_solve(LinearOracle& oracle, const WeightVector& w, ComparisonOracle& f,
                         std::optional<MultiIndex> lam = std::nullopt);

// One oracle query for argmax wx, then the comparison minimum below it.
// No quality guarantee (see make_example_3_1 for how badly it can fail).
SolveReport naive_solve(LinearOracle& oracle, const WeightVector& w, ComparisonOracle& f);

// For quasiconvex f: walk from argmax wx down to 0 dropping one support
// element at a time (highest index first) and return the chain's comparison
// minimum; (max(a) - 1)-best. Quasiconvexity is a caller-asserted contract —
// it cannot be verified through comparisons alone.
SolveReport quasiconvex_solve(LinearOracle& oracle, const WeightVector& w, ComparisonOracle& f);

}  // namespace wisopt
