#include "wisopt/families.hpp"

#include <stdexcept>
#include <string>

namespace wisopt {

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return result;
}

std::vector<std::vector<int>> combinations(const std::vector<int>& items, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > static_cast<int>(items.size())) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  const int n = static_cast<int>(items.size());
  for (;;) {
    std::vector<int> combo;
    combo.reserve(static_cast<std::size_t>(k));
    for (int i : idx) combo.push_back(items[static_cast<std::size_t>(i)]);
    out.push_back(std::move(combo));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return out;
}

ObjectiveTable example_3_1_objective(int m) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(4 * m) + 1);
  for (int k = 0; k <= 4 * m; ++k) {
    values.push_back(k % 2 == 1 ? k : 2 * m);
  }
  return ObjectiveTable(std::move(values));
}

Instance make_example_3_1(int m) {
  if (m < 1) throw std::invalid_argument("example_3_1 requires m >= 1");
  const int n = 4 * m;
  GroundPoint y(n);
  GroundPoint z(n);
  std::vector<int> weights(static_cast<std::size_t>(n));
  for (int j = 0; j < 2 * m; ++j) {
    y.set(j, true);
    weights[static_cast<std::size_t>(j)] = 1;
  }
  for (int j = 2 * m; j < n; ++j) {
    z.set(j, true);
    weights[static_cast<std::size_t>(j)] = 2;
  }
  return Instance{IndependenceSystem::from_generators(n, {y, z}),
                  WeightVector(std::move(weights), PrimitiveTuple({1, 2})),
                  example_3_1_objective(m),
                  "example_3_1(m=" + std::to_string(m) + ")"};
}

namespace {

std::vector<int> index_range(int first, int last) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(last - first));
  for (int j = first; j < last; ++j) out.push_back(j);
  return out;
}

GroundPoint pair_point(int n, const std::vector<int>& a_part, const std::vector<int>& b_part) {
  GroundPoint p(n);
  for (int j : a_part) p.set(j, true);
  for (int j : b_part) p.set(j, true);
  return p;
}

}  // namespace

LowerBoundFamily::LowerBoundFamily(int m) : m_(m), weights_({}, PrimitiveTuple{}) {
  if (m < 2) throw std::invalid_argument("lower_bound family requires m >= 2");
  if (m > kMaxM) {
    throw std::invalid_argument("lower_bound family capped at m <= " + std::to_string(kMaxM));
  }
  const int n = 4 * m;
  std::vector<int> weights(static_cast<std::size_t>(n));
  for (int j = 0; j < 2 * m; ++j) weights[static_cast<std::size_t>(j)] = 2;
  for (int j = 2 * m; j < n; ++j) weights[static_cast<std::size_t>(j)] = 3;
  weights_ = WeightVector(std::move(weights), PrimitiveTuple({2, 3}));

  std::vector<GroundPoint> generators;
  for (int i : {0, 2}) {
    for (const auto& g : tier_members(i)) generators.push_back(g);
  }
  system_ = IndependenceSystem::from_generators(n, std::move(generators));

  t1_a_sets_ = combinations(index_range(0, 2 * m), m + 1);
  t1_b_sets_ = combinations(index_range(2 * m, n), m - 1);
}

std::vector<GroundPoint> LowerBoundFamily::tier_members(int i) const {
  if (i < 0 || i > 2) throw std::invalid_argument("tier index must be 0, 1 or 2");
  const int n = 4 * m_;
  std::vector<GroundPoint> out;
  const auto a_sets = combinations(index_range(0, 2 * m_), m_ + i);
  const auto b_sets = combinations(index_range(2 * m_, n), m_ - i);
  for (const auto& a_part : a_sets) {
    for (const auto& b_part : b_sets) {
      out.push_back(pair_point(n, a_part, b_part));
    }
  }
  return out;
}

std::size_t LowerBoundFamily::t1_size() const { return t1_a_sets_.size() * t1_b_sets_.size(); }

GroundPoint LowerBoundFamily::t1_member(std::size_t index) const {
  if (index >= t1_size()) throw std::out_of_range("T1 index out of range");
  const auto& a_part = t1_a_sets_[index / t1_b_sets_.size()];
  const auto& b_part = t1_b_sets_[index % t1_b_sets_.size()];
  return pair_point(4 * m_, a_part, b_part);
}

IndependenceSystem LowerBoundFamily::system_with_y(std::size_t index) const {
  std::vector<GroundPoint> generators = system_.generators();
  generators.push_back(t1_member(index));
  return IndependenceSystem::from_generators(4 * m_, std::move(generators));
}

long long LowerBoundFamily::query_threshold() const {
  return static_cast<long long>(binomial(2 * m_, m_ + 1));
}

MembershipFamily::MembershipFamily(int m) : m_(m), weights_({}, PrimitiveTuple{}) {
  if (m < 1) throw std::invalid_argument("membership family requires m >= 1");
  if (m > kMaxM) {
    throw std::invalid_argument("membership family capped at m <= " + std::to_string(kMaxM));
  }
  const int n = 2 * m;
  weights_ = WeightVector(std::vector<int>(static_cast<std::size_t>(n), 1), PrimitiveTuple({1}));

  std::vector<GroundPoint> generators;
  for (const auto& s : combinations(index_range(0, n), m - 1)) {
    generators.push_back(GroundPoint::from_support(n, s));
  }
  system_ = IndependenceSystem::from_generators(n, std::move(generators));

  y_sets_ = combinations(index_range(0, n), m);
}

std::size_t MembershipFamily::y_count() const { return y_sets_.size(); }

GroundPoint MembershipFamily::y_member(std::size_t index) const {
  if (index >= y_sets_.size()) throw std::out_of_range("y index out of range");
  return GroundPoint::from_support(2 * m_, y_sets_[index]);
}

IndependenceSystem MembershipFamily::system_with_y(std::size_t index) const {
  std::vector<GroundPoint> generators = system_.generators();
  generators.push_back(y_member(index));
  return IndependenceSystem::from_generators(2 * m_, std::move(generators));
}

long long MembershipFamily::query_threshold() const {
  return static_cast<long long>(binomial(2 * m_, m_));
}

}  // namespace wisopt
