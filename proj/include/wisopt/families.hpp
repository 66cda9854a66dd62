#pragma once

#include <cstddef>
#include <vector>

#include "wisopt/instance.hpp"

namespace wisopt {

unsigned long long binomial(int n, int k);

// All k-element subsets of `items`, in lexicographic order.
std::vector<std::vector<int>> combinations(const std::vector<int>& items, int k);

// The bad instance for the naive strategy: a = (1, 2), n = 4m, generators
// y (first 2m coordinates) and z (last 2m), w = y + 2z, and
// f(k) = k for odd k, 2m for even k.
ObjectiveTable example_3_1_objective(int m);
Instance make_example_3_1(int m);

// The hard family for the linear-optimization oracle: n = 4m, weight 2 on
// I = {first 2m}, weight 3 on J = {last 2m}, S generated by T_0 ∪ T_2 where
// T_i pairs an (m+i)-subset of I with an (m-i)-subset of J. Each S_y adds a
// single member y of T_1, shifting the image by exactly one value, 5m-1.
class LowerBoundFamily {
 public:
  static constexpr int kMaxM = 4;  // T_1 enumeration cap

  explicit LowerBoundFamily(int m);

  int m() const { return m_; }
  int n() const { return 4 * m_; }
  const IndependenceSystem& system() const { return system_; }
  const WeightVector& weights() const { return weights_; }

  std::size_t t1_size() const;
  GroundPoint t1_member(std::size_t index) const;
  IndependenceSystem system_with_y(std::size_t index) const;

  std::vector<GroundPoint> tier_members(int i) const;  // T_i for i in {0,1,2}

  long long query_threshold() const;  // C(2m, m+1)
  int distinguishing_value() const { return 5 * m_ - 1; }

 private:
  int m_;
  IndependenceSystem system_;
  WeightVector weights_;
  std::vector<std::vector<int>> t1_a_sets_;  // C(I, m+1), lexicographic
  std::vector<std::vector<int>> t1_b_sets_;  // C(J, m-1), lexicographic
};

// The hard family for the membership oracle: n = 2m, unit weights,
// S = {x : |supp(x)| <= m-1}; each S_y adds one point of support size m.
class MembershipFamily {
 public:
  static constexpr int kMaxM = 8;

  explicit MembershipFamily(int m);

  int m() const { return m_; }
  int n() const { return 2 * m_; }
  const IndependenceSystem& system() const { return system_; }
  const WeightVector& weights() const { return weights_; }

  std::size_t y_count() const;  // C(2m, m)
  GroundPoint y_member(std::size_t index) const;
  IndependenceSystem system_with_y(std::size_t index) const;

  long long query_threshold() const;  // C(2m, m)
  int distinguishing_value() const { return m_; }

 private:
  int m_;
  IndependenceSystem system_;
  WeightVector weights_;
  std::vector<std::vector<int>> y_sets_;  // C(N, m), lexicographic
};

}  // namespace wisopt
