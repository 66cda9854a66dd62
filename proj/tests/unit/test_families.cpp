#include <doctest.h>

#include <algorithm>
#include <set>

#include "wisopt/families.hpp"
#include "wisopt/oracles.hpp"

using namespace wisopt;

namespace {

std::vector<int> range_set(int lo, int hi, const std::set<int>& removed) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) {
    if (!removed.count(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("binomial and combinations") {
  CHECK(binomial(4, 3) == 4);
  CHECK(binomial(4, 1) == 4);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  const auto combos = combinations({5, 6, 7}, 2);
  CHECK(combos == std::vector<std::vector<int>>{{5, 6}, {5, 7}, {6, 7}});
  CHECK(combinations({1, 2}, 0) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("example_3_1 construction") {
  const Instance inst = make_example_3_1(1);
  CHECK(inst.system.n() == 4);
  CHECK(inst.weights.weights() == std::vector<int>{1, 1, 2, 2});
  CHECK(inst.system.contains(GroundPoint(4)));  // zero point

  // m = 2: image is {0..4} ∪ {0,2,4,6,8}
  const Instance inst2 = make_example_3_1(2);
  CHECK(image(inst2.system, inst2.weights).values() ==
        std::vector<int>{0, 1, 2, 3, 4, 6, 8});

  // f(k) = k for odd k, 2m for even k
  CHECK(inst2.objective.at(3) == 3.0);
  CHECK(inst2.objective.at(6) == 4.0);
  CHECK(inst2.objective.at(0) == 4.0);

  // m = 3 comparison from the definition: f(5) = 5 < f(6) = 6
  const Instance inst3 = make_example_3_1(3);
  TableComparisonOracle cmp(inst3.objective);
  CHECK(cmp.compare(5, 6) == Ordering::kLess);

  // the unique weight maximizer is z
  const GroundPoint xbar = inst2.system.maximize(inst2.weights.weights());
  CHECK(xbar == GroundPoint::from_string("00001111"));
  CHECK(inst2.weights.weight_of(xbar) == 8);
}

TEST_CASE("lower bound family construction facts") {
  const LowerBoundFamily fam(2);
  CHECK(fam.n() == 8);
  CHECK(fam.t1_size() == 16);  // C(4,3) * C(4,1)
  CHECK(fam.query_threshold() == 4);
  CHECK(fam.distinguishing_value() == 9);

  // every member of T0 weighs 5m, T1 5m-1, T2 5m-2
  for (const auto& x : fam.tier_members(0)) CHECK(fam.weights().weight_of(x) == 10);
  for (const auto& x : fam.tier_members(1)) CHECK(fam.weights().weight_of(x) == 9);
  for (const auto& x : fam.tier_members(2)) CHECK(fam.weights().weight_of(x) == 8);

  CHECK_THROWS_AS(LowerBoundFamily(1), std::invalid_argument);
  CHECK_THROWS_AS(LowerBoundFamily(5), std::invalid_argument);
}

TEST_CASE("lower bound family images") {
  for (int m : {2, 3}) {
    const LowerBoundFamily fam(m);
    const auto img = image(fam.system(), fam.weights());
    CHECK(img.values() == range_set(0, 5 * m, {1, 5 * m - 1}));

    // sampled S_y gain exactly the distinguishing value
    for (std::size_t idx : {std::size_t(0), fam.t1_size() / 2, fam.t1_size() - 1}) {
      const auto img_y = image(fam.system_with_y(idx), fam.weights());
      CHECK(img_y.values() == range_set(0, 5 * m, {1}));
    }
  }

  // m = 2 cross-check through explicit expansion
  const LowerBoundFamily fam(2);
  const auto explicit_form =
      IndependenceSystem::from_points(fam.n(), fam.system().all_points());
  CHECK(image(explicit_form, fam.weights()).values() == range_set(0, 10, {1, 9}));
}

TEST_CASE("t1 members are indexable and complete") {
  const LowerBoundFamily fam(2);
  std::set<GroundPoint> seen;
  for (std::size_t idx = 0; idx < fam.t1_size(); ++idx) {
    const GroundPoint y = fam.t1_member(idx);
    CHECK(fam.weights().weight_of(y) == 9);
    CHECK_FALSE(fam.system().contains(y));
    seen.insert(y);
  }
  CHECK(seen.size() == fam.t1_size());
  const auto t1 = fam.tier_members(1);
  CHECK(t1.size() == fam.t1_size());
  for (const auto& y : t1) CHECK(seen.count(y) == 1);
}

TEST_CASE("membership family construction facts") {
  const MembershipFamily fam1(1);
  CHECK(fam1.system().contains(GroundPoint(2)));
  CHECK(fam1.system().all_points().size() == 1);  // S = {0}

  const MembershipFamily fam2(2);
  CHECK(image(fam2.system(), fam2.weights()).values() == std::vector<int>{0, 1});
  const auto img_y = image(fam2.system_with_y(3), fam2.weights());
  CHECK(img_y.values() == std::vector<int>{0, 1, 2});
  CHECK(fam2.query_threshold() == 6);

  const MembershipFamily fam3(3);
  CHECK(fam3.y_count() == 20);  // C(6,3)
  CHECK(fam3.query_threshold() == 20);
}
