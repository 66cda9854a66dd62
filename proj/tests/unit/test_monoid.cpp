#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "wisopt/monoid.hpp"

using namespace wisopt;

namespace {

// Independent reachability oracle: v is representable iff some entry can be
// subtracted to a representable value. Memoized backward recursion, a
// different route than the library's forward DP.
bool reachable_by_recursion(int v, const std::vector<int>& entries, std::vector<int>& memo) {
  if (v == 0) return true;
  if (memo[static_cast<std::size_t>(v)] != -1) return memo[static_cast<std::size_t>(v)] == 1;
  bool ok = false;
  for (int e : entries) {
    if (v >= e && reachable_by_recursion(v - e, entries, memo)) {
      ok = true;
      break;
    }
  }
  memo[static_cast<std::size_t>(v)] = ok ? 1 : 0;
  return ok;
}

int frobenius_within(const std::vector<int>& entries, int bound) {
  std::vector<int> memo(static_cast<std::size_t>(bound) + 1, -1);
  int best = 0;
  for (int v = 1; v <= bound; ++v) {
    if (!reachable_by_recursion(v, entries, memo)) best = v;
  }
  return best;
}

// Doubles the window until min(entries) consecutive values at the top are
// all reachable, which certifies the gap set is complete.
int frobenius_by_recursion(const std::vector<int>& entries) {
  const int a_min = *std::min_element(entries.begin(), entries.end());
  if (a_min == 1) return 0;
  int bound = a_min;
  for (int e : entries) bound = std::max(bound, 2 * e);
  for (;;) {
    std::vector<int> memo(static_cast<std::size_t>(bound) + 1, -1);
    bool complete = true;
    for (int v = bound - a_min + 1; v <= bound; ++v) {
      if (!reachable_by_recursion(v, entries, memo)) {
        complete = false;
        break;
      }
    }
    if (complete) return frobenius_within(entries, bound);
    bound *= 2;
  }
}

// Every primitive tuple with increasing entries, p <= 3 and max <= limit.
std::vector<PrimitiveTuple> small_primitive_tuples(int limit) {
  std::vector<PrimitiveTuple> out;
  out.emplace_back(std::vector<int>{1});
  for (int a1 = 1; a1 <= limit; ++a1) {
    for (int a2 = a1 + 1; a2 <= limit; ++a2) {
      if (std::gcd(a1, a2) == 1) out.emplace_back(std::vector<int>{a1, a2});
      for (int a3 = a2 + 1; a3 <= limit; ++a3) {
        if (std::gcd(std::gcd(a1, a2), a3) == 1) {
          out.emplace_back(std::vector<int>{a1, a2, a3});
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("gcd_tuple basics") {
  CHECK(gcd_tuple({3, 5}) == 1);
  CHECK(gcd_tuple({4, 6}) == 2);
  CHECK(gcd_tuple({2, 3, 4}) == 1);
  CHECK_THROWS_WITH_AS(gcd_tuple({}), "empty tuple", std::invalid_argument);
}

TEST_CASE("primitive tuple validation") {
  CHECK_NOTHROW(PrimitiveTuple({2, 3}));
  CHECK_NOTHROW(PrimitiveTuple{});
  CHECK_THROWS_AS(PrimitiveTuple({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(PrimitiveTuple({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(PrimitiveTuple({0, 1}), std::invalid_argument);
  CHECK(PrimitiveTuple({1, 2, 6}).divisible());
  CHECK_FALSE(PrimitiveTuple({2, 3}).divisible());
}

TEST_CASE("gap data on the worked pairs") {
  const GapData d35 = gap_data(PrimitiveTuple({3, 5}));
  CHECK(d35.frobenius == 7);
  CHECK(d35.gap_values() == std::vector<int>{1, 2, 4, 7});

  CHECK(gap_data(PrimitiveTuple({2, 3})).frobenius == 1);
  CHECK(gap_data(PrimitiveTuple({1})).gaps.count() == 0);
  CHECK(gap_data(PrimitiveTuple({1})).frobenius == 0);
  CHECK(gap_data(PrimitiveTuple{}).frobenius == 0);

  // Sylvester for (7,11): 7*11-7-11 = 59, cross-checked by the recursion
  // oracle scanning to 60.
  const GapData d711 = gap_data(PrimitiveTuple({7, 11}));
  CHECK(d711.frobenius == 59);
  CHECK(frobenius_within({7, 11}, 60) == 59);
}

TEST_CASE("gap window grows past a misleading pair bound") {
  // (3,6,8): every pair shares a factor, min pair product is 10, yet F = 13.
  const GapData data = gap_data(PrimitiveTuple({3, 6, 8}));
  CHECK(data.frobenius == 13);
  CHECK(data.gap_values() == std::vector<int>{1, 2, 4, 5, 7, 10, 13});
  CHECK(data.frobenius + 1 > schur_bound(PrimitiveTuple({3, 6, 8})));
}

TEST_CASE("gap data matches the recursion oracle on all small tuples") {
  for (const auto& a : small_primitive_tuples(9)) {
    const GapData data = gap_data(a);
    CHECK(data.frobenius == frobenius_by_recursion(a.entries()));
    CHECK(data.reachable.contains(0));
    for (int e : a.entries()) {
      if (e <= data.bound) CHECK(data.reachable.contains(e));
    }
    // The pair product bound certifies F over coprime pairs only.
    long long coprime_pair_bound = -1;
    for (int i = 0; i < a.size(); ++i) {
      for (int j = i + 1; j < a.size(); ++j) {
        if (std::gcd(a.at(i), a.at(j)) != 1 || a.at(i) == 1 || a.at(j) == 1) continue;
        const long long prod = static_cast<long long>(a.at(i) - 1) * (a.at(j) - 1);
        if (coprime_pair_bound < 0 || prod < coprime_pair_bound) coprime_pair_bound = prod;
      }
    }
    if (coprime_pair_bound >= 0) CHECK(data.frobenius + 1 <= coprime_pair_bound);
  }
}

TEST_CASE("sylvester equality and gap count for coprime pairs") {
  for (int a1 = 2; a1 <= 20; ++a1) {
    for (int a2 = a1 + 1; a2 <= 20; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      const GapData data = gap_data(PrimitiveTuple({a1, a2}));
      CHECK(data.frobenius == a1 * a2 - a1 - a2);
      CHECK(static_cast<int>(data.gaps.count()) == (a1 - 1) * (a2 - 1) / 2);
    }
  }
}

TEST_CASE("restricted monoid worked example") {
  const PrimitiveTuple a({3, 5});
  const IntSet m = restricted_monoid(a, {3, 4});
  CHECK(m.limit() == 29);
  CHECK_FALSE(m.contains(12));
  CHECK_FALSE(m.contains(17));
  CHECK(m.contains(0));
  CHECK(m.contains(29));
  // telescoping the full membership list against a direct double loop
  std::set<int> expected;
  for (int m1 = 0; m1 <= 3; ++m1) {
    for (int m2 = 0; m2 <= 4; ++m2) expected.insert(3 * m1 + 5 * m2);
  }
  for (int v = 0; v <= 29; ++v) CHECK(m.contains(v) == (expected.count(v) == 1));
}

TEST_CASE("restricted monoid edge tuples") {
  const IntSet full = restricted_monoid(PrimitiveTuple({1}), {5});
  CHECK(full.values() == std::vector<int>{0, 1, 2, 3, 4, 5});
  const IntSet zero = restricted_monoid(PrimitiveTuple({2, 3}), {0, 0});
  CHECK(zero.values() == std::vector<int>{0});
  CHECK_THROWS_AS(restricted_monoid(PrimitiveTuple({2, 3}), {1}), std::invalid_argument);
}

TEST_CASE("restricted monoid symmetry and containment sweep") {
  for (const auto& a : small_primitive_tuples(9)) {
    const GapData gaps = gap_data(a);
    MultiIndex lam(static_cast<std::size_t>(a.size()), 0);
    for (;;) {
      const IntSet m = restricted_monoid(a, lam);
      const int total = m.limit();
      for (int v = 0; v <= total; ++v) {
        CHECK(m.contains(v) == m.contains(total - v));  // symmetry
        if (m.contains(v)) {                            // containment
          CHECK_FALSE(gaps.gaps.contains(v));
          CHECK_FALSE(gaps.gaps.contains(total - v));
        }
      }
      // advance lambda over {0..6}^p
      std::size_t i = lam.size();
      bool advanced = false;
      while (i-- > 0) {
        if (lam[i] < 6) {
          ++lam[i];
          std::fill(lam.begin() + static_cast<std::ptrdiff_t>(i) + 1, lam.end(), 0);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
}

TEST_CASE("saturation worked examples") {
  CHECK_FALSE(is_saturated(PrimitiveTuple({3, 5}), {3, 4}));
  CHECK(missing_saturation_values(PrimitiveTuple({3, 5}), {3, 4}) == std::vector<int>{12, 17});
  CHECK(is_saturated(PrimitiveTuple({3, 5}), {5, 5}));
  CHECK(is_saturated(PrimitiveTuple({1, 2}), {1, 0}));
}

TEST_CASE("saturation part 1: lambda_i >= max(a)") {
  for (const auto& a : small_primitive_tuples(9)) {
    const int p = a.size();
    const int base = a.max_entry();
    // all lambda with entries in {max, max+1, max+2}
    std::vector<int> offsets(static_cast<std::size_t>(p), 0);
    for (;;) {
      MultiIndex lam;
      for (int o : offsets) lam.push_back(base + o);
      CHECK(is_saturated(a, lam));
      std::size_t i = offsets.size();
      bool advanced = false;
      while (i-- > 0) {
        if (offsets[i] < 2) {
          ++offsets[i];
          std::fill(offsets.begin() + static_cast<std::ptrdiff_t>(i) + 1, offsets.end(), 0);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
}

TEST_CASE("saturation part 2: divisible tuples at the ratio thresholds") {
  const std::vector<std::vector<int>> tuples = {{1, 2}, {1, 3}, {1, 2, 4}, {1, 2, 6}, {1, 3, 9}};
  for (const auto& entries : tuples) {
    const PrimitiveTuple a(entries);
    REQUIRE(a.divisible());
    const int p = a.size();
    for (int extra = 0; extra <= 2; ++extra) {
      for (int last = 0; last <= 4; ++last) {
        MultiIndex lam;
        for (int i = 0; i + 1 < p; ++i) {
          lam.push_back(entries[static_cast<std::size_t>(i) + 1] / entries[static_cast<std::size_t>(i)] - 1 + extra);
        }
        lam.push_back(last);
        CHECK(is_saturated(a, lam));
      }
    }
  }
}

TEST_CASE("block subtuple extraction") {
  const auto blk1 = block_subtuple(PrimitiveTuple({2, 3}), {3, 3}, {3, 3});
  CHECK(blk1.indices == std::vector<int>{0, 1});
  CHECK(blk1.entries == std::vector<int>{2, 3});

  const auto blk2 = block_subtuple(PrimitiveTuple({2, 3}), {3, 3}, {2, 3});
  CHECK(blk2.indices == std::vector<int>{1});
  CHECK(blk2.entries == std::vector<int>{1});

  const auto blk3 = block_subtuple(PrimitiveTuple({4, 6, 9}), {9, 9, 9}, {9, 9, 0});
  CHECK(blk3.indices == std::vector<int>{0, 1});
  CHECK(blk3.entries == std::vector<int>{2, 3});

  CHECK_THROWS_AS(block_subtuple(PrimitiveTuple({2, 3}), {1, 1}, {2, 0}), std::invalid_argument);
}

TEST_CASE("r_bound worked values") {
  CHECK(r_bound(PrimitiveTuple({2, 3})) == 1);
  CHECK(r_bound(PrimitiveTuple({1, 2})) == 0);
  CHECK(r_bound(PrimitiveTuple({3, 5})) == 7);
  CHECK(r_bound(PrimitiveTuple{}) == 0);
}

TEST_CASE("r_bound equals the direct sum over the mu grid") {
  for (const auto& a : small_primitive_tuples(7)) {
    const MultiIndex lam = default_lambda(a);
    // direct summation, independent of the subset-grouping shortcut
    long long direct = 0;
    MultiIndex mu(lam.size(), 0);
    for (;;) {
      const BlockSubtuple sub = block_subtuple(a, lam, mu);
      std::vector<int> entries = sub.entries;
      std::sort(entries.begin(), entries.end());
      entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
      if (entries.size() >= 2 && entries.front() >= 2) {
        direct += frobenius_by_recursion(entries);
      }
      std::size_t i = mu.size();
      bool advanced = false;
      while (i-- > 0) {
        if (mu[i] < lam[i]) {
          ++mu[i];
          std::fill(mu.begin() + static_cast<std::ptrdiff_t>(i) + 1, mu.end(), 0);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    CHECK(r_bound(a) == direct);

    // Corollary-level sanity on the same sweep.
    const int p = a.size();
    long long cap = 1;
    for (int i = 0; i < p; ++i) cap *= 2 * a.max_entry();
    CHECK(r_bound(a) <= cap);
    if (a.divisible()) CHECK(r_bound(a) == 0);
    if (p == 2) CHECK(r_bound(a) == gap_data(a).frobenius);
  }
}

TEST_CASE("g_bound worked values") {
  CHECK(g_bound(PrimitiveTuple({2, 3})) == 1);
  CHECK(g_bound(PrimitiveTuple({3, 5})) == 4);
  CHECK(g_bound(PrimitiveTuple({1, 2})) == 0);

  // p = 2 collapses to |G(a)| for any lambda >= (1,1), including overrides.
  CHECK(g_bound(PrimitiveTuple({3, 5}), {10, 10}) == 4);
}

TEST_CASE("bounds accept a lambda override") {
  const PrimitiveTuple a({2, 3});
  CHECK(r_bound(a, {6, 6}) == 1);
  CHECK(r_bound(a, MultiIndex{0, 0}) == 1);  // mu = lambda = 0 pins the full tuple
  CHECK_THROWS_AS(r_bound(a, MultiIndex{1}), std::invalid_argument);
}
