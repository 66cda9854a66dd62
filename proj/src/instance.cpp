#include "wisopt/instance.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace wisopt {

WeightVector::WeightVector(std::vector<int> weights, PrimitiveTuple tuple)
    : weights_(std::move(weights)), tuple_(std::move(tuple)) {
  classes_.resize(static_cast<std::size_t>(tuple_.size()));
  for (int j = 0; j < n(); ++j) {
    const int wj = weights_[static_cast<std::size_t>(j)];
    bool found = false;
    for (int i = 0; i < tuple_.size(); ++i) {
      if (tuple_.at(i) == wj) {
        classes_[static_cast<std::size_t>(i)].push_back(j);
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("weight not in tuple: w[" + std::to_string(j + 1) + "] = " +
                                  std::to_string(wj));
    }
  }
}

MultiIndex WeightVector::class_sizes() const {
  MultiIndex sizes;
  sizes.reserve(classes_.size());
  for (const auto& c : classes_) sizes.push_back(static_cast<int>(c.size()));
  return sizes;
}

int WeightVector::weight_of(const GroundPoint& x) const {
  return static_cast<int>(x.dot(weights_));
}

MultiIndex WeightVector::lambda_of(const GroundPoint& x) const {
  if (x.size() != n()) throw std::invalid_argument("point length mismatch");
  MultiIndex lam(classes_.size(), 0);
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (int j : classes_[i]) {
      if (x.get(j)) ++lam[i];
    }
  }
  return lam;
}

namespace {

// Downward closure of the given masks, sorted; throws past `limit` points.
std::vector<std::uint64_t> close_downward(const std::vector<std::uint64_t>& seeds,
                                          std::size_t limit) {
  std::set<std::uint64_t> closed;
  std::vector<std::uint64_t> work(seeds.begin(), seeds.end());
  closed.insert(0);
  while (!work.empty()) {
    const std::uint64_t m = work.back();
    work.pop_back();
    if (!closed.insert(m).second) continue;
    if (closed.size() > limit) {
      throw std::runtime_error("instance too large: downward closure exceeds " +
                               std::to_string(limit) + " points");
    }
    std::uint64_t rest = m;
    while (rest) {
      const std::uint64_t bit = rest & (~rest + 1);
      rest ^= bit;
      if (!closed.count(m ^ bit)) work.push_back(m ^ bit);
    }
  }
  return std::vector<std::uint64_t>(closed.begin(), closed.end());
}

// Drops generators dominated by another one (and duplicates).
std::vector<GroundPoint> reduce_to_antichain(std::vector<GroundPoint> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<GroundPoint> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t k = 0; k < gens.size() && !dominated; ++k) {
      if (k != i && gens[i].leq(gens[k]) && gens[i] != gens[k]) dominated = true;
    }
    if (!dominated) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

IndependenceSystem IndependenceSystem::from_points(int n, const std::vector<GroundPoint>& points,
                                                   bool strict) {
  if (n < 0) throw std::invalid_argument("ground set size must be nonnegative");
  if (n > 64) throw std::runtime_error("explicit systems support n <= 64");
  std::vector<std::uint64_t> masks;
  masks.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("point length mismatch");
    masks.push_back(p.mask());
  }
  std::vector<std::uint64_t> closed = close_downward(masks, kDefaultEnumerationLimit);
  if (strict) {
    std::vector<std::uint64_t> given = masks;
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (given != closed) {
      throw std::invalid_argument("explicit point set not downward closed");
    }
  }
  IndependenceSystem s;
  s.n_ = n;
  s.kind_ = Kind::kExplicit;
  s.explicit_masks_ = std::move(closed);
  return s;
}

IndependenceSystem IndependenceSystem::from_generators(int n, std::vector<GroundPoint> generators) {
  if (n < 0) throw std::invalid_argument("ground set size must be nonnegative");
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("generator length mismatch");
  }
  if (generators.empty()) generators.push_back(GroundPoint(n));
  IndependenceSystem s;
  s.n_ = n;
  s.kind_ = Kind::kGenerators;
  s.generators_ = reduce_to_antichain(std::move(generators));
  return s;
}

bool IndependenceSystem::contains(const GroundPoint& x) const {
  if (x.size() != n_) throw std::invalid_argument("point length mismatch");
  if (kind_ == Kind::kGenerators) {
    for (const auto& g : generators_) {
      if (x.leq(g)) return true;
    }
    return false;
  }
  return std::binary_search(explicit_masks_.begin(), explicit_masks_.end(), x.mask());
}

const std::vector<GroundPoint>& IndependenceSystem::generators() const {
  if (kind_ != Kind::kGenerators) {
    throw std::logic_error("generators() requires a generator-form system");
  }
  return generators_;
}

std::size_t IndependenceSystem::explicit_size() const {
  if (kind_ != Kind::kExplicit) {
    throw std::logic_error("explicit_size() requires an explicit system");
  }
  return explicit_masks_.size();
}

std::vector<std::uint64_t> IndependenceSystem::all_masks(std::size_t limit) const {
  if (n_ > 64) throw std::runtime_error("instance too large: enumeration requires n <= 64");
  if (kind_ == Kind::kExplicit) {
    if (explicit_masks_.size() > limit) {
      throw std::runtime_error("instance too large: " + std::to_string(explicit_masks_.size()) +
                               " points exceed the limit " + std::to_string(limit));
    }
    return explicit_masks_;
  }
  std::vector<std::uint64_t> seeds;
  seeds.reserve(generators_.size());
  for (const auto& g : generators_) seeds.push_back(g.mask());
  return close_downward(seeds, limit);
}

std::vector<GroundPoint> IndependenceSystem::all_points(std::size_t limit) const {
  std::vector<GroundPoint> out;
  for (std::uint64_t m : all_masks(limit)) out.push_back(GroundPoint::from_mask(n_, m));
  return out;
}

GroundPoint IndependenceSystem::maximize(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector length mismatch");

  if (kind_ == Kind::kGenerators) {
    std::optional<GroundPoint> best;
    long long best_value = 0;
    for (const auto& g : generators_) {
      GroundPoint candidate(n_);
      long long value = 0;
      for (int j = 0; j < n_; ++j) {
        if (g.get(j) && v[static_cast<std::size_t>(j)] > 0) {
          candidate.set(j, true);
          value += v[static_cast<std::size_t>(j)];
        }
      }
      if (!best || value > best_value || (value == best_value && candidate < *best)) {
        best = std::move(candidate);
        best_value = value;
      }
    }
    return *best;  // at least one generator exists by construction
  }

  std::uint64_t best_mask = 0;
  long long best_value = 0;
  bool have = false;
  for (std::uint64_t m : explicit_masks_) {
    long long value = 0;
    std::uint64_t rest = m;
    while (rest) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      value += v[static_cast<std::size_t>(j)];
    }
    if (!have || value > best_value || (value == best_value && lex_less_mask(m, best_mask))) {
      best_mask = m;
      best_value = value;
      have = true;
    }
  }
  if (!have) throw std::logic_error("independence system is empty");
  return GroundPoint::from_mask(n_, best_mask);
}

IntSet image(const IndependenceSystem& system, const WeightVector& w) {
  if (w.n() != system.n()) throw std::invalid_argument("weight length mismatch");

  if (system.kind() == IndependenceSystem::Kind::kGenerators) {
    int max_weight = 0;
    for (const auto& g : system.generators()) {
      max_weight = std::max(max_weight, w.weight_of(g));
    }
    IntSet out(max_weight);
    for (const auto& g : system.generators()) {
      const int total = w.weight_of(g);
      std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
      reach[0] = true;
      for (int j : g.support()) {
        const int wj = w.weights()[static_cast<std::size_t>(j)];
        for (int val = total; val >= wj; --val) {
          if (reach[static_cast<std::size_t>(val - wj)]) reach[static_cast<std::size_t>(val)] = true;
        }
      }
      for (int val = 0; val <= total; ++val) {
        if (reach[static_cast<std::size_t>(val)]) out.insert(val);
      }
    }
    return out;
  }

  int max_weight = 0;
  std::vector<int> point_weights;
  for (std::uint64_t m : system.all_masks()) {
    int value = 0;
    std::uint64_t rest = m;
    while (rest) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      value += w.weights()[static_cast<std::size_t>(j)];
    }
    point_weights.push_back(value);
    max_weight = std::max(max_weight, value);
  }
  IntSet out(max_weight);
  for (int value : point_weights) out.insert(value);
  return out;
}

ObjectiveTable::ObjectiveTable(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("objective table must cover value 0");
}

double ObjectiveTable::at(int value) const {
  if (value < 0 || value >= static_cast<int>(values_.size())) {
    throw std::invalid_argument("objective table too short: value " + std::to_string(value) +
                                ", table covers [0, " + std::to_string(max_index()) + "]");
  }
  return values_[static_cast<std::size_t>(value)];
}

ObjectiveTable ObjectiveTable::identity(int max_index) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(max_index) + 1);
  for (int k = 0; k <= max_index; ++k) values.push_back(k);
  return ObjectiveTable(std::move(values));
}

}  // namespace wisopt
