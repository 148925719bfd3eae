#include "timeprice/instances.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace timeprice {

DiscreteTypeDistribution gen_kstep_tight(int k, double r, double eps) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(r > 1.0)) throw std::invalid_argument("r must be > 1");
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps must be in (0, 1)");
  }
  double q = r / eps;
  std::vector<BuyerType> types;
  types.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    double theta = (r - 1.0) * (std::pow(q, i) - 1.0) / (q - 1.0);
    double v = std::pow(r, i);
    double prob = i < k ? std::pow(r, 1 - i) - std::pow(r, -i)
                        : std::pow(r, 1 - k);
    types.push_back(BuyerType{theta, v, prob});
  }
  return DiscreteTypeDistribution(std::move(types));
}

SeparationLine kstep_tight_line(int k, double r, double eps) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  double q = r / eps;
  std::vector<Segment> segments;
  for (int i = 1; i < k; ++i) {
    double theta = (r - 1.0) * (std::pow(q, i) - 1.0) / (q - 1.0);
    double slope = std::pow(eps, i);
    segments.push_back(Segment{slope, std::pow(r, i) - slope * theta});
  }
  segments.push_back(Segment{0.0, std::pow(r, k)});
  return SeparationLine(std::move(segments));
}

DiscreteTypeDistribution gen_loss_tight(int k, double d, double eps) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(d > static_cast<double>(k))) {
    throw std::invalid_argument("d must exceed k");
  }
  if (!(eps > 0.0 && eps < 1.0 / static_cast<double>(k))) {
    throw std::invalid_argument("eps must be in (0, 1/k)");
  }
  std::vector<double> theta(static_cast<std::size_t>(k));
  std::vector<double> value(static_cast<std::size_t>(k));
  std::vector<double> weight(static_cast<std::size_t>(k));
  double theta_acc = 0.0;
  double value_acc = 0.0;
  for (int i = 1; i <= k; ++i) {
    double pw = std::pow(d, i - 1);
    theta_acc += pw;
    value_acc += pw * (1.0 - (i - 1) * eps);
    theta[static_cast<std::size_t>(i - 1)] = theta_acc;
    value[static_cast<std::size_t>(i - 1)] = value_acc;
  }
  // Equal-revenue masses: every posted price v_i collects the same revenue
  // v_1, so the chain through the points beats all of them by the small
  // per-type premiums eps*theta_i and is the unique optimum.
  for (int i = 0; i < k; ++i) {
    auto u = static_cast<std::size_t>(i);
    double tail = value[0] / value[u];
    double next = (i + 1 < k) ? value[0] / value[u + 1] : 0.0;
    weight[u] = tail - next;
  }
  std::vector<BuyerType> types;
  for (int i = 0; i < k; ++i) {
    auto u = static_cast<std::size_t>(i);
    types.push_back(BuyerType{theta[u], value[u], weight[u]});
  }
  return DiscreteTypeDistribution(std::move(types));
}

BandClosedForm gen_band() {
  auto density = [](double theta, double v) {
    double gap = v - theta;
    return (theta >= 0.0 && theta <= 2.0 && gap >= 0.0 && gap <= 1.0) ? 0.5
                                                                      : 0.0;
  };
  auto breaks = [](double theta) {
    return std::vector<double>{theta, theta + 1.0};
  };
  ContinuousDistribution dist = ContinuousDistribution::make(
      Interval{0.0, 2.0}, Interval{0.0, 3.0}, density, breaks);
  SeparationLine line(
      {Segment{1.0, 2.0 / 3.0}, Segment{0.0, 4.0 / 3.0}});
  PricingFunction pricing(
      {PriceStep{0.0, 4.0 / 3.0}, PriceStep{1.0, 2.0 / 3.0}});
  return BandClosedForm{std::move(dist), std::move(line), std::move(pricing)};
}

DiscreteTypeDistribution gen_product(
    const std::vector<std::pair<double, double>>& theta_marginal,
    const std::vector<std::pair<double, double>>& v_marginal) {
  auto check = [](const std::vector<std::pair<double, double>>& marginal,
                  const char* name) {
    double mass = 0.0;
    for (const auto& [value, prob] : marginal) mass += prob;
    if (std::fabs(mass - 1.0) > 1e-9) {
      throw std::invalid_argument(std::string(name) +
                                  " marginal mass differs from 1");
    }
  };
  check(theta_marginal, "theta");
  check(v_marginal, "v");
  std::vector<BuyerType> types;
  for (const auto& [theta, p] : theta_marginal) {
    for (const auto& [v, q] : v_marginal) {
      types.push_back(BuyerType{theta, v, p * q});
    }
  }
  return DiscreteTypeDistribution(std::move(types));
}

}  // namespace timeprice
