#pragma once

#include <vector>

#include "wisopt/intset.hpp"

namespace wisopt {

// Greatest common divisor of a nonempty list of positive integers.
int gcd_tuple(const std::vector<int>& entries);

// The weight alphabet a = (a_1, ..., a_p): distinct positive integers with
// gcd 1. The empty tuple (p = 0) is allowed.
class PrimitiveTuple {
 public:
  PrimitiveTuple() = default;
  explicit PrimitiveTuple(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int at(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  int max_entry() const;  // max(a); 0 for the empty tuple
  bool divisible() const;  // a_i divides a_{i+1} for all i

  friend bool operator==(const PrimitiveTuple&, const PrimitiveTuple&) = default;

 private:
  std::vector<int> entries_;
};

// Nonnegative multiplicity vectors (lambda, mu, tau, nu); length p.
using MultiIndex = std::vector<int>;

bool leq(const MultiIndex& a, const MultiIndex& b);
long long dot(const MultiIndex& mu, const PrimitiveTuple& a);

// min{(a_i - 1)(a_j - 1) : i < j}; 0 when p < 2. Certifies F(a) + 1 <= value
// when the minimizing pair is coprime (always true for p = 2); tuples whose
// pairs share factors can exceed it, e.g. F(3,6,8) = 13 > (3-1)(6-1).
int schur_bound(const PrimitiveTuple& a);

// M(a) within [0, bound] together with the gap set G(a) and F(a).
struct GapData {
  PrimitiveTuple tuple;
  int bound = 0;
  IntSet reachable;  // M(a) ∩ [0, bound]
  IntSet gaps;       // G(a) ∩ [0, bound]
  int frobenius = 0;  // max G(a); 0 when the gap set is empty

  std::vector<int> gap_values() const { return gaps.values(); }
};

// The default bound starts at max(schur_bound(a), max(a)) and grows until
// the window provably contains the whole gap set, so frobenius is exact.
// With an explicit bound the fields describe the window [0, bound] only.
GapData gap_data(const PrimitiveTuple& a);
GapData gap_data(const PrimitiveTuple& a, int bound);

// Frobenius number of an arbitrary list of positive integers with gcd 1;
// duplicates are tolerated (they do not change the monoid).
int frobenius_of(std::vector<int> entries);

// M(a, lambda) = { mu·a : 0 <= mu <= lambda } as a dense set over [0, lambda·a].
IntSet restricted_monoid(const PrimitiveTuple& a, const MultiIndex& lam);

// Values of {0..lambda·a} \ (G(a) ∪ (lambda·a - G(a))) not covered by
// M(a, lambda); lambda is saturated exactly when this is empty.
std::vector<int> missing_saturation_values(const PrimitiveTuple& a, const MultiIndex& lam);
bool is_saturated(const PrimitiveTuple& a, const MultiIndex& lam);

// The index set I = {i : mu_i = lam_i} and the subtuple (a_i / g : i in I)
// with g = gcd(a_i : i in I).
struct BlockSubtuple {
  std::vector<int> indices;
  std::vector<int> entries;
};
BlockSubtuple block_subtuple(const PrimitiveTuple& a, const MultiIndex& lam, const MultiIndex& mu);

// lambda_i = max(a) for every i; the block grid used by the main solver.
MultiIndex default_lambda(const PrimitiveTuple& a);

// r(a) = sum over mu <= lambda of F(a^lambda_mu). Guarantees r(a) = 0 for
// divisible a and r(a) = F(a) for p = 2.
long long r_bound(const PrimitiveTuple& a);
long long r_bound(const PrimitiveTuple& a, const MultiIndex& lam);

// g(a) = sum over mu <= lambda of |G(a^lambda_mu)|; equals |G(a)| for p = 2.
long long g_bound(const PrimitiveTuple& a);
long long g_bound(const PrimitiveTuple& a, const MultiIndex& lam);

}  // namespace wisopt
