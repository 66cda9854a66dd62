#include "wisopt/generate.hpp"

#include <stdexcept>
#include <string>

namespace wisopt {

Instance generate_instance(const GeneratorOptions& options) {
  if (options.n < 0) throw std::invalid_argument("n must be nonnegative");
  if (options.tuple.size() == 0 && options.n > 0) {
    throw std::invalid_argument("nonempty ground set needs a nonempty tuple");
  }
  if (options.generator_count < 0) throw std::invalid_argument("generator count must be nonnegative");

  std::mt19937_64 rng(options.seed);
  const int p = options.tuple.size();

  std::vector<int> weights(static_cast<std::size_t>(options.n));
  for (auto& wj : weights) {
    wj = options.tuple.at(static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(p))));
  }
  WeightVector w(std::move(weights), options.tuple);

  std::vector<GroundPoint> generators;
  for (int g = 0; g < options.generator_count; ++g) {
    GroundPoint point(options.n);
    for (int j = 0; j < options.n; ++j) point.set(j, uniform_below(rng, 2) == 1);
    generators.push_back(std::move(point));
  }
  IndependenceSystem system = IndependenceSystem::from_generators(options.n, std::move(generators));

  const int max_weight = w.weight_of(system.maximize(w.weights()));
  std::vector<double> values(static_cast<std::size_t>(max_weight) + 1);
  switch (options.objective) {
    case ObjectiveKind::kIdentity:
      for (int k = 0; k <= max_weight; ++k) values[static_cast<std::size_t>(k)] = k;
      break;
    case ObjectiveKind::kConvex: {
      const int target = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_weight) + 1));
      for (int k = 0; k <= max_weight; ++k) {
        const double d = k - target;
        values[static_cast<std::size_t>(k)] = d * d;
      }
      break;
    }
    case ObjectiveKind::kRandomTable: {
      // Values drawn from a small range so ties occur and the distinct-value
      // rank is exercised.
      const std::uint64_t range = static_cast<std::uint64_t>(max_weight) / 2 + 3;
      for (int k = 0; k <= max_weight; ++k) {
        values[static_cast<std::size_t>(k)] = static_cast<double>(uniform_below(rng, range));
      }
      break;
    }
  }

  return Instance{std::move(system), std::move(w), ObjectiveTable(std::move(values)),
                  "gen(seed=" + std::to_string(options.seed) + ")"};
}

}  // namespace wisopt
