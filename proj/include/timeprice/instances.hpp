#ifndef TIMEPRICE_INSTANCES_HPP
#define TIMEPRICE_INSTANCES_HPP

#include <utility>
#include <vector>

#include "timeprice/types.hpp"

namespace timeprice {

// Equal-revenue family on which every posted price collects exactly r while
// a k-step scheme approaches k * r:
//   v_i = r^i, theta_i = (r-1) * ((r/eps)^i - 1) / (r/eps - 1),
//   Pr[Q_i] = r^(1-i) - r^(-i) for i < k, r^(1-k) for i = k.
DiscreteTypeDistribution gen_kstep_tight(int k, double r, double eps);

// The chain connecting the family's type points: slope eps^i after theta_i,
// horizontal at r^k beyond theta_k.
SeparationLine kstep_tight_line(int k, double r, double eps);

// Family whose optimal scheme wastes nearly (k-1) times its revenue in time:
//   theta_i = (d^i - 1) / (d - 1), v_i = sum_{j<i} d^j (1 - j*eps),
// with equal-revenue masses f_i = v_1/v_i - v_1/v_{i+1} (f_k = v_1/v_k), so
// that the chain through the points strictly beats every posted price. The
// chain's margin over its chord shortcuts is of order eps^2, so eps must stay
// well above the solver's tie threshold.
DiscreteTypeDistribution gen_loss_tight(int k, double d = 1e4,
                                        double eps = 1e-3);

// Uniform density 1/2 on the band {0 <= v - theta <= 1, 0 <= theta <= 2},
// together with its known closed-form optimum.
struct BandClosedForm {
  ContinuousDistribution distribution;
  SeparationLine optimal_line;
  PricingFunction optimal_pricing;
  double optimal_revenue = 22.0 / 27.0;
  double posted_revenue = 25.0 / 32.0;
  double posted_price = 5.0 / 4.0;
  double time_loss = 1.0 / 27.0;
};

BandClosedForm gen_band();

// Product of independent marginals; each must sum to 1 (else throws).
DiscreteTypeDistribution gen_product(
    const std::vector<std::pair<double, double>>& theta_marginal,
    const std::vector<std::pair<double, double>>& v_marginal);

}  // namespace timeprice

#endif  // TIMEPRICE_INSTANCES_HPP
