#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wisopt {

// Dense set of integers over the bounded universe [0, limit].
class IntSet {
 public:
  IntSet() = default;
  explicit IntSet(int limit) : limit_(limit), bits_(static_cast<std::size_t>(limit) + 1, false) {
    if (limit < 0) throw std::invalid_argument("IntSet limit must be nonnegative");
  }

  int limit() const { return limit_; }
  bool empty_universe() const { return limit_ < 0; }

  bool contains(int v) const { return v >= 0 && v <= limit_ && bits_[static_cast<std::size_t>(v)]; }

  void insert(int v) {
    if (v < 0 || v > limit_) throw std::out_of_range("IntSet value outside universe");
    bits_[static_cast<std::size_t>(v)] = true;
  }

  void erase(int v) {
    if (v >= 0 && v <= limit_) bits_[static_cast<std::size_t>(v)] = false;
  }

  std::size_t count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

  std::vector<int> values() const {
    std::vector<int> out;
    for (int v = 0; v <= limit_; ++v) {
      if (bits_[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
  }

  // Largest member, or fallback when the set is empty.
  int max_value(int fallback) const {
    for (int v = limit_; v >= 0; --v) {
      if (bits_[static_cast<std::size_t>(v)]) return v;
    }
    return fallback;
  }

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  int limit_ = -1;
  std::vector<bool> bits_;
};

}  // namespace wisopt
