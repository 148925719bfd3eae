#ifndef TIMEPRICE_MODEL_HPP
#define TIMEPRICE_MODEL_HPP

#include "timeprice/types.hpp"

namespace timeprice {

// Least time minimizing price + theta * time. Since steps are left-closed
// the minimizer is always a step threshold; the least-time tie-break picks
// the highest price among optimal actions.
BestAction best_response(const PricingFunction& p, double theta);

// Buys iff the best total cost is at most v (equality buys). Non-buyers get
// time = 0, payment = 0.
Decision buyer_decision(const PricingFunction& p, const BuyerType& type);

// Lower envelope of the lines (price_k + threshold_k * theta), pruned to the
// segments active somewhere on [0, inf).
SeparationLine separation_from_pricing(const PricingFunction& p);

// One step per segment: threshold = slope, price = intercept, i.e.
// p(l'(theta)) = l(theta) - theta * l'(theta).
PricingFunction pricing_from_separation(const SeparationLine& l);

Report evaluate_discrete(const SeparationLine& l,
                         const DiscreteTypeDistribution& dist);

// Piecewise numeric integration of the revenue and time-loss objectives over
// segment windows, to relative error <= tol. Throws QuadratureError on
// non-convergence.
Report evaluate_continuous(const SeparationLine& l,
                           const ContinuousDistribution& c, double tol = 1e-8);

}  // namespace timeprice

#endif  // TIMEPRICE_MODEL_HPP
