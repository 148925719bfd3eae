#ifndef TIMEPRICE_TYPES_HPP
#define TIMEPRICE_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace timeprice {

// Comparison tolerance for geometric predicates. Scaled by the magnitude of
// the operands so that instances with coordinates around 1e16 (the tight
// loss-ratio family) behave the same as desk-scale ones.
inline constexpr double kTol = 1e-9;

inline double tol_scale(double a, double b = 0.0, double c = 0.0) {
  return kTol * std::max({1.0, std::fabs(a), std::fabs(b), std::fabs(c)});
}

// a >= b up to tolerance
inline bool approx_geq(double a, double b) { return a >= b - tol_scale(a, b); }
inline bool approx_eq(double a, double b) {
  return std::fabs(a - b) <= tol_scale(a, b);
}

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// One atom of a type distribution: cost per unit time, valuation, mass.
struct BuyerType {
  double theta = 0.0;
  double v = 0.0;
  double prob = 0.0;
};

struct Validation {
  bool ok = true;
  std::vector<std::string> issues;
};

// Canonical sort + duplicate merge, then invariant check. Returned verdict
// lists every violation found on the normalized type list.
Validation validate_instance(std::vector<BuyerType> types);

class DiscreteTypeDistribution {
 public:
  // Sorts lexicographically by (theta, v), merges duplicate coordinates,
  // throws std::invalid_argument listing all violated invariants.
  explicit DiscreteTypeDistribution(std::vector<BuyerType> types);

  const std::vector<BuyerType>& types() const { return types_; }
  std::size_t size() const { return types_.size(); }
  std::size_t distinct_thetas() const;

 private:
  std::vector<BuyerType> types_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

// Joint density over a support rectangle. `v_breaks`, when set, lists the v
// values at which the density is discontinuous for a given theta; quadrature
// subdivides there. `theta_breaks` plays the same role for the outer
// integral.
class ContinuousDistribution {
 public:
  using Density = double (*)(double theta, double v);

  template <typename F, typename B = std::nullptr_t>
  static ContinuousDistribution make(Interval theta_range, Interval v_range,
                                     F density, B v_breaks = nullptr,
                                     std::vector<double> theta_breaks = {});

  double density(double theta, double v) const;
  const Interval& theta_range() const { return theta_range_; }
  const Interval& v_range() const { return v_range_; }
  std::vector<double> v_breaks(double theta) const;
  const std::vector<double>& theta_breaks() const { return theta_breaks_; }
  void set_theta_breaks(std::vector<double> b) { theta_breaks_ = std::move(b); }

 private:
  ContinuousDistribution() = default;
  void check_unit_mass() const;

  Interval theta_range_;
  Interval v_range_;
  std::function<double(double, double)> density_;
  std::function<std::vector<double>(double)> v_breaks_;
  std::vector<double> theta_breaks_;
};

// One linear piece of a separation line: v = intercept + slope * theta.
// slope is the time a buyer served on this piece spends, intercept the price
// she pays.
struct Segment {
  double slope = 0.0;
  double intercept = 0.0;
  double value_at(double theta) const { return intercept + slope * theta; }
};

// Concave, non-decreasing piecewise-linear boundary between buying and
// non-buying types. Segments have strictly decreasing slopes (last one 0)
// and strictly increasing intercepts; cross points are increasing and >= 0.
class SeparationLine {
 public:
  explicit SeparationLine(std::vector<Segment> segments);

  // Lower envelope of arbitrary lines, pruned to the segments that attain
  // the minimum somewhere on [0, inf).
  static SeparationLine from_envelope(std::vector<Segment> lines);

  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<double>& cross_points() const { return crosses_; }
  std::size_t size() const { return segments_.size(); }

  double value(double theta) const;
  // Active piece at theta; a kink belongs to the flatter (right) segment.
  std::size_t active_index(double theta) const;

 private:
  std::vector<Segment> segments_;
  std::vector<double> crosses_;  // size() - 1 entries
};

struct PriceStep {
  double time = 0.0;
  double price = 0.0;
};

// Non-increasing step function time -> price. Steps are left-closed: the
// lower price is attained at its threshold, so minima over t are attained.
class PricingFunction {
 public:
  explicit PricingFunction(std::vector<PriceStep> steps);

  const std::vector<PriceStep>& steps() const { return steps_; }
  double price_at(double t) const;

 private:
  std::vector<PriceStep> steps_;
};

struct BestAction {
  double time = 0.0;
  double price = 0.0;
  double total_cost = 0.0;  // price + theta * time
};

struct Decision {
  bool buys = false;
  double time = 0.0;
  double payment = 0.0;
};

struct Report {
  double revenue = 0.0;
  double time_loss = 0.0;
  std::vector<Decision> decisions;  // parallel to the distribution's types
};

template <typename F, typename B>
ContinuousDistribution ContinuousDistribution::make(
    Interval theta_range, Interval v_range, F density, B v_breaks,
    std::vector<double> theta_breaks) {
  ContinuousDistribution c;
  c.theta_range_ = theta_range;
  c.v_range_ = v_range;
  c.density_ = std::move(density);
  if constexpr (!std::is_same_v<B, std::nullptr_t>) {
    c.v_breaks_ = std::move(v_breaks);
  }
  c.theta_breaks_ = std::move(theta_breaks);
  c.check_unit_mass();
  return c;
}

}  // namespace timeprice

#endif  // TIMEPRICE_TYPES_HPP
