#pragma once

#include <cstdint>
#include <random>

#include "wisopt/instance.hpp"

namespace wisopt {

// Unbiased draw from [0, bound); portable across platforms because only the
// mt19937_64 engine output is used, never a stdlib distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = bound == 0 ? 0 : (~std::uint64_t(0) - bound + 1) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return bound == 0 ? 0 : r % bound;
  }
}

enum class ObjectiveKind { kRandomTable, kIdentity, kConvex };

struct GeneratorOptions {
  int n = 8;
  PrimitiveTuple tuple;
  int generator_count = 4;
  ObjectiveKind objective = ObjectiveKind::kRandomTable;
  std::uint64_t seed = 0;
};

// Seeded random generator-form instance: weights drawn from the tuple,
// Bernoulli(1/2) generator bits, objective table sized to the max weight.
Instance generate_instance(const GeneratorOptions& options);

}  // namespace wisopt
