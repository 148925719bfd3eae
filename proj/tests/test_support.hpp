#ifndef TIMEPRICE_TEST_SUPPORT_HPP
#define TIMEPRICE_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "timeprice/types.hpp"

namespace timeprice::testing {

// Random discrete instance on a coarse grid: coordinates are multiples of
// 0.05 (separation well above 1e-3), masses are normalized small integers.
inline DiscreteTypeDistribution random_grid_instance(std::mt19937& rng,
                                                     int max_types = 6) {
  std::uniform_int_distribution<int> ntypes(1, max_types);
  std::uniform_int_distribution<int> coord(0, 60);
  std::uniform_int_distribution<int> weight(1, 9);
  int n = ntypes(rng);
  std::vector<BuyerType> types;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    BuyerType t;
    t.theta = 0.05 * coord(rng);
    t.v = 0.05 * (coord(rng) + 1);
    t.prob = weight(rng);
    // Regenerate on coordinate collision so the support size stays n.
    bool dup = false;
    for (const BuyerType& u : types) {
      if (u.theta == t.theta && u.v == t.v) dup = true;
    }
    if (dup) {
      --i;
      continue;
    }
    total += t.prob;
    types.push_back(t);
  }
  for (BuyerType& t : types) t.prob /= total;
  return DiscreteTypeDistribution(std::move(types));
}

// Valid separation line built directly from its invariant parameterization:
// pick decreasing slopes and increasing cross points, then integrate.
inline SeparationLine random_line(std::mt19937& rng, int max_segments = 4) {
  std::uniform_int_distribution<int> nseg(1, max_segments);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  int m = nseg(rng);
  std::vector<double> slopes(static_cast<std::size_t>(m), 0.0);
  for (int r = m - 2; r >= 0; --r) {
    slopes[static_cast<std::size_t>(r)] =
        slopes[static_cast<std::size_t>(r + 1)] + u(rng);
  }
  std::vector<Segment> segments;
  double intercept = u(rng);
  double x = 0.0;
  for (int r = 0; r < m; ++r) {
    segments.push_back(Segment{slopes[static_cast<std::size_t>(r)], intercept});
    if (r + 1 < m) {
      x += u(rng);
      intercept += (slopes[static_cast<std::size_t>(r)] -
                    slopes[static_cast<std::size_t>(r + 1)]) *
                   x;
    }
  }
  return SeparationLine(std::move(segments));
}

// Random valid pricing function: increasing thresholds, decreasing prices.
inline PricingFunction random_pricing(std::mt19937& rng, int max_steps = 4) {
  std::uniform_int_distribution<int> nstep(1, max_steps);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  int m = nstep(rng);
  std::vector<PriceStep> steps;
  double t = 0.0;
  std::vector<double> prices(static_cast<std::size_t>(m), u(rng));
  for (int i = m - 2; i >= 0; --i) {
    prices[static_cast<std::size_t>(i)] =
        prices[static_cast<std::size_t>(i + 1)] + u(rng);
  }
  for (int i = 0; i < m; ++i) {
    steps.push_back(PriceStep{t, prices[static_cast<std::size_t>(i)]});
    t += u(rng);
  }
  return PricingFunction(std::move(steps));
}

}  // namespace timeprice::testing

#endif  // TIMEPRICE_TEST_SUPPORT_HPP
