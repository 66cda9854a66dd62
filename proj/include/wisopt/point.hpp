#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wisopt {

// 0/1 vector over the ground set {0, ..., n-1}.
//
// Comparison is lexicographic with index 0 most significant, so
// (0,1,1) < (1,0,0); this is the tie-break order used by the oracles.
class GroundPoint {
 public:
  GroundPoint() = default;
  explicit GroundPoint(int n) : bits_(static_cast<std::size_t>(n), 0) {}

  static GroundPoint from_support(int n, const std::vector<int>& support);
  // Parses strings like "0110"; the leftmost character is index 0.
  static GroundPoint from_string(const std::string& s);
  static GroundPoint from_mask(int n, std::uint64_t mask);

  int size() const { return static_cast<int>(bits_.size()); }
  bool get(int j) const { return bits_[static_cast<std::size_t>(j)] != 0; }
  void set(int j, bool value) { bits_[static_cast<std::size_t>(j)] = value ? 1 : 0; }

  int count() const;
  std::vector<int> support() const;
  bool is_zero() const;
  bool leq(const GroundPoint& other) const;
  GroundPoint without(int j) const;

  long long dot(const std::vector<int>& v) const;

  // Bitmask with coordinate j at bit j; requires size() <= 64.
  std::uint64_t mask() const;
  std::string to_string() const;

  friend bool operator==(const GroundPoint&, const GroundPoint&) = default;
  friend auto operator<=>(const GroundPoint& a, const GroundPoint& b) { return a.bits_ <=> b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

// Lexicographic order on mask-encoded points (coordinate j at bit j).
bool lex_less_mask(std::uint64_t a, std::uint64_t b);

}  // namespace wisopt
