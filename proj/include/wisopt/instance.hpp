#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wisopt/intset.hpp"
#include "wisopt/monoid.hpp"
#include "wisopt/point.hpp"

namespace wisopt {

// Weight vector w with every w_j drawn from a primitive tuple a, plus the
// derived classes N_i = {j : w_j = a_i}.
class WeightVector {
 public:
  WeightVector(std::vector<int> weights, PrimitiveTuple tuple);

  int n() const { return static_cast<int>(weights_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  const PrimitiveTuple& tuple() const { return tuple_; }
  const std::vector<int>& class_members(int i) const { return classes_[static_cast<std::size_t>(i)]; }
  MultiIndex class_sizes() const;

  int weight_of(const GroundPoint& x) const;  // wx
  MultiIndex lambda_of(const GroundPoint& x) const;  // lambda_i(x) = |supp(x) ∩ N_i|

 private:
  std::vector<int> weights_;
  PrimitiveTuple tuple_;
  std::vector<std::vector<int>> classes_;
};

// Downward-closed family S ⊆ {0,1}^n, either listed explicitly (closed on
// construction) or as the downward closure of a generator antichain.
class IndependenceSystem {
 public:
  enum class Kind { kExplicit, kGenerators };

  static constexpr std::size_t kDefaultEnumerationLimit = std::size_t(1) << 22;

  // The trivial system over an empty ground set, S = {()}.
  IndependenceSystem() : explicit_masks_{0} {}

  // Closes the listed points downward unless `strict`, in which case a
  // non-closed list is rejected. Explicit systems require n <= 64.
  static IndependenceSystem from_points(int n, const std::vector<GroundPoint>& points,
                                        bool strict = false);
  static IndependenceSystem from_generators(int n, std::vector<GroundPoint> generators);

  Kind kind() const { return kind_; }
  int n() const { return n_; }

  bool contains(const GroundPoint& x) const;
  // Generator antichain (kGenerators only).
  const std::vector<GroundPoint>& generators() const;
  std::size_t explicit_size() const;

  // Full point list; expands generators. Throws when the expansion would
  // exceed `limit` points or n > 64.
  std::vector<GroundPoint> all_points(std::size_t limit = kDefaultEnumerationLimit) const;
  std::vector<std::uint64_t> all_masks(std::size_t limit = kDefaultEnumerationLimit) const;

  // Deterministic maximizer of vx over S: the lexicographically smallest
  // maximizer that uses no v_j = 0 elements. Uncounted; oracles wrap this.
  GroundPoint maximize(const std::vector<int>& v) const;

 private:
  int n_ = 0;
  Kind kind_ = Kind::kExplicit;
  std::vector<GroundPoint> generators_;        // kGenerators: antichain, sorted
  std::vector<std::uint64_t> explicit_masks_;  // kExplicit: sorted masks
};

// Exact image w·S = {wx : x ∈ S}.
IntSet image(const IndependenceSystem& system, const WeightVector& w);

// Objective values f(0), ..., f(W_max); solvers only ever see comparisons.
class ObjectiveTable {
 public:
  explicit ObjectiveTable(std::vector<double> values);

  double at(int value) const;  // throws "objective table too short" when out of range
  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<double>& values() const { return values_; }

  static ObjectiveTable identity(int max_index);

 private:
  std::vector<double> values_;
};

struct Instance {
  IndependenceSystem system;
  WeightVector weights;
  ObjectiveTable objective;
  std::string name;
};

}  // namespace wisopt
