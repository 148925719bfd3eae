#include "timeprice/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "timeprice/geometry.hpp"
#include "timeprice/quadrature.hpp"

namespace timeprice {

namespace {

// Canonical form: lexicographic (theta, v) order, exact duplicates merged.
std::vector<BuyerType> normalize(std::vector<BuyerType> types) {
  std::sort(types.begin(), types.end(),
            [](const BuyerType& a, const BuyerType& b) {
              if (a.theta != b.theta) return a.theta < b.theta;
              return a.v < b.v;
            });
  std::vector<BuyerType> merged;
  for (const BuyerType& t : types) {
    if (!merged.empty() && merged.back().theta == t.theta &&
        merged.back().v == t.v) {
      merged.back().prob += t.prob;
    } else {
      merged.push_back(t);
    }
  }
  return merged;
}

}  // namespace

Validation validate_instance(std::vector<BuyerType> types) {
  Validation verdict;
  auto fail = [&verdict](const std::string& msg) {
    verdict.ok = false;
    verdict.issues.push_back(msg);
  };

  if (types.empty()) {
    fail("empty type list");
    return verdict;
  }
  types = normalize(std::move(types));
  double mass = 0.0;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const BuyerType& t = types[i];
    std::ostringstream at;
    at << "type " << i << " (" << t.theta << ", " << t.v << ")";
    if (!(t.theta >= 0.0)) fail(at.str() + ": theta must be >= 0");
    if (!(t.v >= 0.0)) fail(at.str() + ": v must be >= 0");
    if (!(t.prob > 0.0 && t.prob <= 1.0 + kTol)) {
      fail(at.str() + ": prob must be in (0, 1]");
    }
    mass += t.prob;
  }
  if (std::fabs(mass - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "total mass " << mass << " differs from 1 by more than 1e-9";
    fail(msg.str());
  }
  return verdict;
}

DiscreteTypeDistribution::DiscreteTypeDistribution(
    std::vector<BuyerType> types) {
  Validation verdict = validate_instance(types);
  if (!verdict.ok) {
    std::string msg = "invalid type distribution:";
    for (const std::string& issue : verdict.issues) msg += "\n  " + issue;
    throw std::invalid_argument(msg);
  }
  types_ = normalize(std::move(types));
}

std::size_t DiscreteTypeDistribution::distinct_thetas() const {
  std::size_t m = 0;
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (i == 0 || types_[i].theta != types_[i - 1].theta) ++m;
  }
  return m;
}

double ContinuousDistribution::density(double theta, double v) const {
  if (theta < theta_range_.lo || theta > theta_range_.hi) return 0.0;
  if (v < v_range_.lo || v > v_range_.hi) return 0.0;
  return density_(theta, v);
}

std::vector<double> ContinuousDistribution::v_breaks(double theta) const {
  if (!v_breaks_) return {};
  return v_breaks_(theta);
}

void ContinuousDistribution::check_unit_mass() const {
  auto column = [this](double theta) {
    auto f = [this, theta](double v) { return density_(theta, v); };
    return integrate(f, v_range_.lo, v_range_.hi, v_breaks(theta),
                     {.abs_tol = 1e-10});
  };
  double mass = integrate(column, theta_range_.lo, theta_range_.hi,
                          theta_breaks_, {.abs_tol = 1e-8});
  if (std::fabs(mass - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << "continuous distribution mass " << mass
        << " differs from 1 by more than 1e-6";
    throw std::invalid_argument(msg.str());
  }
}

SeparationLine::SeparationLine(std::vector<Segment> segments) {
  Validation verdict = validate_chain(segments);
  if (!verdict.ok) {
    std::string msg = "invalid separation line:";
    for (const std::string& issue : verdict.issues) msg += "\n  " + issue;
    throw std::invalid_argument(msg);
  }
  segments_ = std::move(segments);
  segments_.back().slope = 0.0;  // squash sub-tolerance terminal slope
  crosses_.reserve(segments_.size() - 1);
  for (std::size_t r = 0; r + 1 < segments_.size(); ++r) {
    crosses_.push_back(cross(segments_[r], segments_[r + 1]));
  }
}

SeparationLine SeparationLine::from_envelope(std::vector<Segment> lines) {
  if (lines.empty()) {
    throw std::invalid_argument("envelope of an empty line set");
  }
  std::sort(lines.begin(), lines.end(), [](const Segment& a, const Segment& b) {
    if (a.slope != b.slope) return a.slope > b.slope;
    return a.intercept < b.intercept;
  });
  // With equal slopes only the lowest intercept can attain the minimum.
  lines.erase(std::unique(lines.begin(), lines.end(),
                          [](const Segment& a, const Segment& b) {
                            return a.slope == b.slope;
                          }),
              lines.end());

  std::vector<Segment> kept;
  std::vector<double> starts;  // activation theta of kept[i]
  for (const Segment& line : lines) {
    while (!kept.empty()) {
      double x = (line.intercept - kept.back().intercept) /
                 (kept.back().slope - line.slope);
      double floor = kept.size() >= 2 ? starts.back() : 0.0;
      if (x <= floor) {
        kept.pop_back();
        starts.pop_back();
      } else {
        break;
      }
    }
    if (kept.empty()) {
      kept.push_back(line);
      starts.push_back(-kInfinity);
    } else {
      double x = (line.intercept - kept.back().intercept) /
                 (kept.back().slope - line.slope);
      kept.push_back(line);
      starts.push_back(x);
    }
  }
  return SeparationLine(std::move(kept));
}

double SeparationLine::value(double theta) const {
  double best = kInfinity;
  for (const Segment& s : segments_) best = std::min(best, s.value_at(theta));
  return best;
}

std::size_t SeparationLine::active_index(double theta) const {
  for (std::size_t r = 0; r < crosses_.size(); ++r) {
    if (theta < crosses_[r] - tol_scale(theta, crosses_[r])) return r;
  }
  return segments_.size() - 1;
}

PricingFunction::PricingFunction(std::vector<PriceStep> steps)
    : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("pricing with no steps");
  if (std::fabs(steps_.front().time) > kTol) {
    throw std::invalid_argument("first step threshold must be 0");
  }
  steps_.front().time = 0.0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].time < 0.0 || steps_[i].price < 0.0) {
      throw std::invalid_argument("pricing steps must be nonnegative");
    }
    if (i > 0) {
      if (steps_[i].time <= steps_[i - 1].time) {
        throw std::invalid_argument("step thresholds must strictly increase");
      }
      if (steps_[i].price >= steps_[i - 1].price) {
        throw std::invalid_argument("step prices must strictly decrease");
      }
    }
  }
}

double PricingFunction::price_at(double t) const {
  double price = steps_.front().price;
  for (const PriceStep& s : steps_) {
    if (s.time <= t + tol_scale(t, s.time)) price = s.price;
  }
  return price;
}

}  // namespace timeprice
