#include "wisopt/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wisopt {

namespace {

constexpr long long kMaxUniverse = 1LL << 24;

long long checked_universe(long long value, const char* what) {
  if (value > kMaxUniverse) {
    throw std::runtime_error(std::string(what) + " universe too large (" + std::to_string(value) +
                             " > " + std::to_string(kMaxUniverse) + ")");
  }
  return value;
}

}  // namespace

int gcd_tuple(const std::vector<int>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty tuple");
  int g = 0;
  for (int e : entries) g = std::gcd(g, e);
  return g;
}

PrimitiveTuple::PrimitiveTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) return;
  for (int e : entries_) {
    if (e <= 0) throw std::invalid_argument("tuple not primitive: entries must be positive");
  }
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("tuple not primitive: entries must be distinct");
  }
  if (gcd_tuple(entries_) != 1) {
    throw std::invalid_argument("tuple not primitive: gcd is not 1");
  }
}

int PrimitiveTuple::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool PrimitiveTuple::divisible() const {
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i + 1] % entries_[i] != 0) return false;
  }
  return true;
}

bool leq(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

long long dot(const MultiIndex& mu, const PrimitiveTuple& a) {
  if (static_cast<int>(mu.size()) != a.size()) {
    throw std::invalid_argument("multi-index length mismatch");
  }
  long long sum = 0;
  for (int i = 0; i < a.size(); ++i) sum += static_cast<long long>(mu[static_cast<std::size_t>(i)]) * a.at(i);
  return sum;
}

int schur_bound(const PrimitiveTuple& a) {
  if (a.size() < 2) return 0;
  long long best = -1;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) {
      const long long prod = static_cast<long long>(a.at(i) - 1) * (a.at(j) - 1);
      if (best < 0 || prod < best) best = prod;
    }
  }
  return static_cast<int>(best);
}

GapData gap_data(const PrimitiveTuple& a) {
  int bound = std::max(schur_bound(a), a.max_entry());
  if (a.size() == 0) return gap_data(a, 0);
  const int a_min = *std::min_element(a.entries().begin(), a.entries().end());
  if (a_min == 1) return gap_data(a, bound);

  // The pairwise product bound only certifies F(a) when the pair is coprime
  // (e.g. F(3,6,8) = 13 > (3-1)(6-1)), so grow the window until the top
  // a_min values are all reachable; past such a run every value is reachable.
  for (;;) {
    GapData data = gap_data(a, bound);
    bool complete = true;
    for (int v = bound - a_min + 1; v <= bound; ++v) {
      if (!data.reachable.contains(v)) {
        complete = false;
        break;
      }
    }
    if (complete) return data;
    bound *= 2;
  }
}

GapData gap_data(const PrimitiveTuple& a, int bound) {
  if (bound < 0) throw std::invalid_argument("gap bound must be nonnegative");
  checked_universe(bound, "gap set");

  GapData data;
  data.tuple = a;
  data.bound = bound;
  data.reachable = IntSet(bound);
  data.gaps = IntSet(bound);

  std::vector<bool> reach(static_cast<std::size_t>(bound) + 1, false);
  reach[0] = true;
  for (int i = 0; i < a.size(); ++i) {
    const int step = a.at(i);
    for (int v = step; v <= bound; ++v) {
      if (reach[static_cast<std::size_t>(v - step)]) reach[static_cast<std::size_t>(v)] = true;
    }
  }
  for (int v = 0; v <= bound; ++v) {
    if (reach[static_cast<std::size_t>(v)]) {
      data.reachable.insert(v);
    } else {
      data.gaps.insert(v);
    }
  }
  data.frobenius = data.gaps.max_value(0);
  return data;
}

int frobenius_of(std::vector<int> entries) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  if (entries.empty() || entries.front() == 1) return 0;
  return gap_data(PrimitiveTuple(entries)).frobenius;
}

IntSet restricted_monoid(const PrimitiveTuple& a, const MultiIndex& lam) {
  if (static_cast<int>(lam.size()) != a.size()) {
    throw std::invalid_argument("lambda length mismatch");
  }
  for (int l : lam) {
    if (l < 0) throw std::invalid_argument("lambda must be nonnegative");
  }
  const int total = static_cast<int>(checked_universe(dot(lam, a), "restricted monoid"));

  std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
  reach[0] = true;
  for (int i = 0; i < a.size(); ++i) {
    const int step = a.at(i);
    const int copies = lam[static_cast<std::size_t>(i)];
    if (copies == 0) continue;
    std::vector<bool> next(static_cast<std::size_t>(total) + 1, false);
    for (int v = 0; v <= total; ++v) {
      if (!reach[static_cast<std::size_t>(v)]) continue;
      for (int k = 0; k <= copies; ++k) {
        const long long nv = v + static_cast<long long>(k) * step;
        if (nv > total) break;
        next[static_cast<std::size_t>(nv)] = true;
      }
    }
    reach = std::move(next);
  }

  IntSet out(total);
  for (int v = 0; v <= total; ++v) {
    if (reach[static_cast<std::size_t>(v)]) out.insert(v);
  }
  return out;
}

std::vector<int> missing_saturation_values(const PrimitiveTuple& a, const MultiIndex& lam) {
  const IntSet monoid = restricted_monoid(a, lam);
  const int total = monoid.limit();
  const GapData gaps = gap_data(a);

  std::vector<int> missing;
  for (int v = 0; v <= total; ++v) {
    const bool allowed = !gaps.gaps.contains(v) && !gaps.gaps.contains(total - v);
    if (monoid.contains(v)) {
      if (!allowed) {
        throw std::logic_error("restricted monoid escapes the gap-complement window");
      }
    } else if (allowed) {
      missing.push_back(v);
    }
  }
  return missing;
}

bool is_saturated(const PrimitiveTuple& a, const MultiIndex& lam) {
  return missing_saturation_values(a, lam).empty();
}

BlockSubtuple block_subtuple(const PrimitiveTuple& a, const MultiIndex& lam, const MultiIndex& mu) {
  if (static_cast<int>(lam.size()) != a.size() || static_cast<int>(mu.size()) != a.size()) {
    throw std::invalid_argument("multi-index length mismatch");
  }
  for (int v : mu) {
    if (v < 0) throw std::invalid_argument("mu must be nonnegative");
  }
  if (!leq(mu, lam)) throw std::invalid_argument("mu not componentwise <= lambda");

  BlockSubtuple sub;
  int g = 0;
  for (int i = 0; i < a.size(); ++i) {
    if (mu[static_cast<std::size_t>(i)] == lam[static_cast<std::size_t>(i)]) {
      sub.indices.push_back(i);
      g = std::gcd(g, a.at(i));
    }
  }
  for (int i : sub.indices) sub.entries.push_back(a.at(i) / g);
  return sub;
}

MultiIndex default_lambda(const PrimitiveTuple& a) {
  return MultiIndex(static_cast<std::size_t>(a.size()), a.max_entry());
}

namespace {

// Both bounds sum a per-block quantity that depends on mu only through the
// pinned index set I = {i : mu_i = lambda_i}, so group the mu grid by I:
// each subset I occurs prod over i not in I of lambda_i times.
long long blockwise_sum(const PrimitiveTuple& a, const MultiIndex& lam, bool gap_cardinality) {
  if (static_cast<int>(lam.size()) != a.size()) {
    throw std::invalid_argument("lambda length mismatch");
  }
  for (int l : lam) {
    if (l < 0) throw std::invalid_argument("lambda must be nonnegative");
  }
  const int p = a.size();
  if (p > 20) throw std::runtime_error("tuple too long for block sweep (p > 20)");

  long long sum = 0;
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    long long multiplicity = 1;
    std::vector<int> picked;
    for (int i = 0; i < p; ++i) {
      if (mask & (1u << i)) {
        picked.push_back(a.at(i));
      } else {
        multiplicity *= lam[static_cast<std::size_t>(i)];
      }
    }
    if (multiplicity == 0 || picked.size() < 2) continue;

    const int g = gcd_tuple(picked);
    for (int& e : picked) e /= g;
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    if (picked.size() < 2 || picked.front() == 1) continue;

    const GapData data = gap_data(PrimitiveTuple(picked));
    const long long value = gap_cardinality ? static_cast<long long>(data.gaps.count())
                                            : data.frobenius;
    sum += multiplicity * value;
  }
  return sum;
}

}  // namespace

long long r_bound(const PrimitiveTuple& a) { return r_bound(a, default_lambda(a)); }

long long r_bound(const PrimitiveTuple& a, const MultiIndex& lam) {
  return blockwise_sum(a, lam, /*gap_cardinality=*/false);
}

long long g_bound(const PrimitiveTuple& a) { return g_bound(a, default_lambda(a)); }

long long g_bound(const PrimitiveTuple& a, const MultiIndex& lam) {
  return blockwise_sum(a, lam, /*gap_cardinality=*/true);
}

}  // namespace wisopt
