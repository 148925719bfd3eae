#ifndef TIMEPRICE_SOLVER_HPP
#define TIMEPRICE_SOLVER_HPP

#include <cstddef>

#include "timeprice/model.hpp"
#include "timeprice/types.hpp"

namespace timeprice {

// A segment anchored at type indices: non-horizontal candidates pass through
// the two anchor types, horizontal ones through at least their anchor
// (left == right).
struct CandidateSegment {
  Segment seg;
  std::size_t left = 0;
  std::size_t right = 0;
};

struct SolveResult {
  SeparationLine line;
  PricingFunction pricing;
  Report report;
  double optimal_value = 0.0;  // == report.revenue
};

struct PostedResult {
  double price = 0.0;
  double revenue = 0.0;
};

// Exact DP over candidate segments (pairs of types plus horizontal lines at
// each valuation), ordered by decreasing slope with windows split at cross
// points. O(n^4 log n).
SolveResult solve_optimal(const DiscreteTypeDistribution& dist);

// Best posted price among the valuations; ties toward the lower price.
PostedResult solve_posted(const DiscreteTypeDistribution& dist);

// Same DP with chain length capped at k segments. k = 1 is the posted
// optimum; k >= n + 1 matches solve_optimal.
SolveResult solve_kstep(const DiscreteTypeDistribution& dist, int k);

// Independent oracle: exhaustive enumeration of every valid chain built from
// candidate lines, scored with evaluate_discrete. Throws on n > 7.
SolveResult brute_force_optimal(const DiscreteTypeDistribution& dist);

}  // namespace timeprice

#endif  // TIMEPRICE_SOLVER_HPP
