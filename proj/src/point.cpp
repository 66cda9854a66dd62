#include "wisopt/point.hpp"

#include <bit>
#include <stdexcept>

namespace wisopt {

GroundPoint GroundPoint::from_support(int n, const std::vector<int>& support) {
  GroundPoint p(n);
  for (int j : support) {
    if (j < 0 || j >= n) throw std::invalid_argument("support index out of range");
    p.set(j, true);
  }
  return p;
}

GroundPoint GroundPoint::from_string(const std::string& s) {
  GroundPoint p(static_cast<int>(s.size()));
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '1') {
      p.set(static_cast<int>(j), true);
    } else if (s[j] != '0') {
      throw std::invalid_argument("point string must contain only 0 and 1");
    }
  }
  return p;
}

GroundPoint GroundPoint::from_mask(int n, std::uint64_t mask) {
  GroundPoint p(n);
  for (int j = 0; j < n; ++j) {
    if (mask & (std::uint64_t(1) << j)) p.set(j, true);
  }
  return p;
}

int GroundPoint::count() const {
  int c = 0;
  for (auto b : bits_) c += b;
  return c;
}

std::vector<int> GroundPoint::support() const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (get(j)) out.push_back(j);
  }
  return out;
}

bool GroundPoint::is_zero() const {
  for (auto b : bits_) {
    if (b) return false;
  }
  return true;
}

bool GroundPoint::leq(const GroundPoint& other) const {
  if (size() != other.size()) throw std::invalid_argument("point length mismatch");
  for (int j = 0; j < size(); ++j) {
    if (get(j) && !other.get(j)) return false;
  }
  return true;
}

GroundPoint GroundPoint::without(int j) const {
  GroundPoint p = *this;
  p.set(j, false);
  return p;
}

long long GroundPoint::dot(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != size()) throw std::invalid_argument("vector length mismatch");
  long long sum = 0;
  for (int j = 0; j < size(); ++j) {
    if (get(j)) sum += v[static_cast<std::size_t>(j)];
  }
  return sum;
}

std::uint64_t GroundPoint::mask() const {
  if (size() > 64) throw std::runtime_error("point too long for mask form (n > 64)");
  std::uint64_t m = 0;
  for (int j = 0; j < size(); ++j) {
    if (get(j)) m |= std::uint64_t(1) << j;
  }
  return m;
}

std::string GroundPoint::to_string() const {
  std::string s(static_cast<std::size_t>(size()), '0');
  for (int j = 0; j < size(); ++j) {
    if (get(j)) s[static_cast<std::size_t>(j)] = '1';
  }
  return s;
}

bool lex_less_mask(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int j = std::countr_zero(a ^ b);  // lowest differing coordinate
  return (a & (std::uint64_t(1) << j)) == 0;
}

}  // namespace wisopt
