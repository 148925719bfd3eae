#include "timeprice/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace timeprice {

Segment segment_through(const BuyerType& a, const BuyerType& b) {
  if (a.theta == b.theta) {
    throw std::invalid_argument(
        "segment_through: types share the same theta (degenerate pair)");
  }
  double slope = (b.v - a.v) / (b.theta - a.theta);
  return Segment{slope, a.v - slope * a.theta};
}

double cross(const Segment& s1, const Segment& s2) {
  if (s1.slope == s2.slope) {
    throw std::invalid_argument("cross: parallel segments");
  }
  return (s2.intercept - s1.intercept) / (s1.slope - s2.slope);
}

double mass_above(const DiscreteTypeDistribution& dist, const Segment& s,
                  const ThetaWindow& w) {
  double mass = 0.0;
  for (const BuyerType& t : dist.types()) {
    if (t.theta < w.lo - tol_scale(t.theta, w.lo)) continue;
    if (t.theta >= w.hi - tol_scale(t.theta, w.hi)) continue;
    if (approx_geq(t.v, s.value_at(t.theta))) mass += t.prob;
  }
  return mass;
}

Validation validate_chain(const std::vector<Segment>& segments) {
  Validation verdict;
  auto fail = [&verdict](const std::string& msg) {
    verdict.ok = false;
    verdict.issues.push_back(msg);
  };

  if (segments.empty()) {
    fail("chain has no segments");
    return verdict;
  }
  for (std::size_t r = 0; r < segments.size(); ++r) {
    if (segments[r].slope < 0.0) fail("negative slope");
    if (segments[r].intercept < 0.0) fail("negative intercept");
    if (r > 0 && segments[r].slope >= segments[r - 1].slope) {
      fail("slopes not strictly decreasing");
    }
    if (r > 0 && segments[r].intercept <= segments[r - 1].intercept) {
      fail("intercepts not strictly increasing");
    }
  }
  if (std::fabs(segments.back().slope) > kTol) {
    fail("terminal segment is not horizontal");
  }
  if (verdict.ok) {
    double prev = -kInfinity;
    for (std::size_t r = 0; r + 1 < segments.size(); ++r) {
      double x = cross(segments[r], segments[r + 1]);
      if (x < 0.0) fail("negative cross point");
      if (x <= prev) fail("cross points not strictly increasing");
      prev = x;
    }
  }
  return verdict;
}

MassProfile::MassProfile(const DiscreteTypeDistribution& dist,
                         const Segment& s) {
  auto thetas = std::make_shared<std::vector<double>>();
  thetas->reserve(dist.size());
  for (const BuyerType& t : dist.types()) thetas->push_back(t.theta);
  thetas_ = std::move(thetas);
  prefix_.assign(dist.size() + 1, 0.0);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const BuyerType& t = dist.types()[i];
    double above = approx_geq(t.v, s.value_at(t.theta)) ? t.prob : 0.0;
    prefix_[i + 1] = prefix_[i] + above;
  }
}

std::size_t MassProfile::cut(double x) const {
  if (x == kInfinity) return thetas_->size();
  // First index with theta >= x, treating values within tolerance of x as
  // belonging to the right window. Shared by both window ends so adjacent
  // windows partition the mass exactly.
  auto it = std::lower_bound(thetas_->begin(), thetas_->end(), x);
  std::size_t i = static_cast<std::size_t>(it - thetas_->begin());
  while (i > 0 && (*thetas_)[i - 1] >= x - tol_scale((*thetas_)[i - 1], x)) {
    --i;
  }
  return i;
}

double MassProfile::query(double lo, double hi) const {
  std::size_t a = cut(lo);
  std::size_t b = cut(hi);
  if (b <= a) return 0.0;
  return prefix_[b] - prefix_[a];
}

ProfileSet::ProfileSet(const DiscreteTypeDistribution& dist) : dist_(&dist) {
  auto thetas = std::make_shared<std::vector<double>>();
  thetas->reserve(dist.size());
  for (const BuyerType& t : dist.types()) thetas->push_back(t.theta);
  thetas_ = std::move(thetas);
}

MassProfile ProfileSet::build(const Segment& s) const {
  MassProfile p;
  p.thetas_ = thetas_;
  p.prefix_.assign(dist_->size() + 1, 0.0);
  for (std::size_t i = 0; i < dist_->size(); ++i) {
    const BuyerType& t = dist_->types()[i];
    double above = approx_geq(t.v, s.value_at(t.theta)) ? t.prob : 0.0;
    p.prefix_[i + 1] = p.prefix_[i] + above;
  }
  return p;
}

}  // namespace timeprice
