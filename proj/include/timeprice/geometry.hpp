#ifndef TIMEPRICE_GEOMETRY_HPP
#define TIMEPRICE_GEOMETRY_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "timeprice/types.hpp"

namespace timeprice {

// Half-open theta window [lo, hi); hi may be +infinity.
struct ThetaWindow {
  double lo = 0.0;
  double hi = kInfinity;
};

// Line through two type points: slope (b.v - a.v) / (b.theta - a.theta),
// intercept chosen so both points lie on it. Throws std::invalid_argument on
// equal thetas.
Segment segment_through(const BuyerType& a, const BuyerType& b);

// Theta coordinate where the two lines meet. Throws on parallel segments.
double cross(const Segment& s1, const Segment& s2);

// Total mass of types with theta in [w.lo, w.hi) and v on or above the line.
double mass_above(const DiscreteTypeDistribution& dist, const Segment& s,
                  const ThetaWindow& w);

// Checks the concave-chain invariants: strictly decreasing nonnegative
// slopes ending at 0, nonnegative strictly increasing intercepts, strictly
// increasing nonnegative cross points.
Validation validate_chain(const std::vector<Segment>& segments);

// Per-segment prefix-mass structure for O(log n) window queries. Types are
// indexed in the distribution's canonical (theta-sorted) order.
class MassProfile {
 public:
  MassProfile(const DiscreteTypeDistribution& dist, const Segment& s);

  // Mass of types above the segment's line with theta in [lo, hi).
  double query(double lo, double hi) const;

 private:
  std::shared_ptr<const std::vector<double>> thetas_;
  std::vector<double> prefix_;  // prefix_[i] = mass above among first i types

  friend class ProfileSet;
  MassProfile() = default;

  std::size_t cut(double x) const;
};

// Builds MassProfiles against a shared theta array.
class ProfileSet {
 public:
  explicit ProfileSet(const DiscreteTypeDistribution& dist);

  MassProfile build(const Segment& s) const;

 private:
  const DiscreteTypeDistribution* dist_;
  std::shared_ptr<const std::vector<double>> thetas_;
};

}  // namespace timeprice

#endif  // TIMEPRICE_GEOMETRY_HPP
