#include "wisopt/oracles.hpp"

namespace wisopt {

GroundPoint SystemLinearOracle::do_maximize(const std::vector<int>& v) {
  return system_->maximize(v);
}

Ordering TableComparisonOracle::do_compare(int left, int right) {
  const double fl = table_->at(left);
  const double fr = table_->at(right);
  if (fl < fr) return Ordering::kLess;
  if (fl > fr) return Ordering::kGreater;
  return Ordering::kEqual;
}

}  // namespace wisopt
