#include "timeprice/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "timeprice/quadrature.hpp"

namespace timeprice {

BestAction best_response(const PricingFunction& p, double theta) {
  BestAction best;
  bool first = true;
  for (const PriceStep& s : p.steps()) {
    double cost = s.price + theta * s.time;
    // Thresholds ascend, so keeping only strict improvements realizes the
    // least-time tie-break.
    if (first || cost < best.total_cost - tol_scale(cost, best.total_cost)) {
      best = BestAction{s.time, s.price, cost};
      first = false;
    }
  }
  return best;
}

Decision buyer_decision(const PricingFunction& p, const BuyerType& type) {
  BestAction a = best_response(p, type.theta);
  if (approx_geq(type.v, a.total_cost)) {
    return Decision{true, a.time, a.price};
  }
  return Decision{false, 0.0, 0.0};
}

SeparationLine separation_from_pricing(const PricingFunction& p) {
  std::vector<Segment> lines;
  lines.reserve(p.steps().size());
  for (const PriceStep& s : p.steps()) {
    lines.push_back(Segment{s.time, s.price});
  }
  return SeparationLine::from_envelope(std::move(lines));
}

PricingFunction pricing_from_separation(const SeparationLine& l) {
  std::vector<PriceStep> steps;
  steps.reserve(l.size());
  for (auto it = l.segments().rbegin(); it != l.segments().rend(); ++it) {
    steps.push_back(PriceStep{it->slope, it->intercept});
  }
  return PricingFunction(std::move(steps));
}

Report evaluate_discrete(const SeparationLine& l,
                         const DiscreteTypeDistribution& dist) {
  Report report;
  report.decisions.reserve(dist.size());
  for (const BuyerType& t : dist.types()) {
    const Segment& seg = l.segments()[l.active_index(t.theta)];
    Decision d;
    if (approx_geq(t.v, seg.value_at(t.theta))) {
      d = Decision{true, seg.slope, seg.intercept};
      report.revenue += seg.intercept * t.prob;
      report.time_loss += t.theta * seg.slope * t.prob;
    }
    report.decisions.push_back(d);
  }
  return report;
}

Report evaluate_continuous(const SeparationLine& l,
                           const ContinuousDistribution& c, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const Interval& tr = c.theta_range();
  const Interval& vr = c.v_range();

  // Mass of valuations on or above level at a given theta.
  auto tail = [&](double theta, double level) {
    double lo = std::max(level, vr.lo);
    if (lo >= vr.hi) return 0.0;
    auto f = [&](double v) { return c.density(theta, v); };
    return integrate(f, lo, vr.hi, c.v_breaks(theta),
                     {.abs_tol = tol * 1e-3});
  };

  std::vector<double> cuts{tr.lo, tr.hi};
  for (double x : l.cross_points()) cuts.push_back(x);
  for (double x : c.theta_breaks()) cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::remove_if(cuts.begin(), cuts.end(),
                            [&](double x) { return x < tr.lo || x > tr.hi; }),
             cuts.end());

  Report report;
  QuadratureOptions opt{.abs_tol = tol * std::max(1.0, vr.hi)};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i];
    double b = cuts[i + 1];
    if (!(b > a)) continue;
    const Segment& seg = l.segments()[l.active_index(0.5 * (a + b))];
    auto rev = [&](double theta) { return tail(theta, seg.value_at(theta)); };
    double m = integrate(rev, a, b, {}, opt);
    report.revenue += seg.intercept * m;
    if (seg.slope > 0.0) {
      auto loss = [&](double theta) {
        return theta * tail(theta, seg.value_at(theta));
      };
      report.time_loss += seg.slope * integrate(loss, a, b, {}, opt);
    }
  }
  return report;
}

}  // namespace timeprice
