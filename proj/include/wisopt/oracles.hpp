#pragma once

#include <vector>

#include "wisopt/instance.hpp"
#include "wisopt/point.hpp"

namespace wisopt {

struct OracleStats {
  long long linear_queries = 0;
  long long comparison_queries = 0;
  long long membership_queries = 0;
};

// Black box returning some x ∈ S maximizing vx. Query counting lives here so
// every implementation (system-backed, adversary) is counted the same way.
class LinearOracle {
 public:
  virtual ~LinearOracle() = default;

  GroundPoint maximize(const std::vector<int>& v) {
    ++count_;
    return do_maximize(v);
  }
  long long queries() const { return count_; }

 private:
  virtual GroundPoint do_maximize(const std::vector<int>& v) = 0;
  long long count_ = 0;
};

class SystemLinearOracle final : public LinearOracle {
 public:
  explicit SystemLinearOracle(const IndependenceSystem& system) : system_(&system) {}

 private:
  GroundPoint do_maximize(const std::vector<int>& v) override;
  const IndependenceSystem* system_;
};

enum class Ordering { kLess, kEqual, kGreater };

// Black box asserting how f(left) compares to f(right); reveals no values.
class ComparisonOracle {
 public:
  virtual ~ComparisonOracle() = default;

  Ordering compare(int left, int right) {
    ++count_;
    return do_compare(left, right);
  }
  long long queries() const { return count_; }

 private:
  virtual Ordering do_compare(int left, int right) = 0;
  long long count_ = 0;
};

class TableComparisonOracle final : public ComparisonOracle {
 public:
  explicit TableComparisonOracle(const ObjectiveTable& table) : table_(&table) {}

 private:
  Ordering do_compare(int left, int right) override;
  const ObjectiveTable* table_;
};

// Black box answering x ∈ S.
class MembershipOracle {
 public:
  virtual ~MembershipOracle() = default;

  bool contains(const GroundPoint& x) {
    ++count_;
    return do_contains(x);
  }
  long long queries() const { return count_; }

 private:
  virtual bool do_contains(const GroundPoint& x) = 0;
  long long count_ = 0;
};

class SystemMembershipOracle final : public MembershipOracle {
 public:
  explicit SystemMembershipOracle(const IndependenceSystem& system) : system_(&system) {}

 private:
  bool do_contains(const GroundPoint& x) override { return system_->contains(x); }
  const IndependenceSystem* system_;
};

}  // namespace wisopt
