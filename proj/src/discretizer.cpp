#include "timeprice/discretizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "timeprice/quadrature.hpp"

namespace timeprice {

DiscretizationResult discretize(const ContinuousDistribution& c,
                                double epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  const Interval& tr = c.theta_range();
  const Interval& vr = c.v_range();
  if (epsilon > tr.width() + kTol) {
    throw std::invalid_argument("epsilon exceeds the support width");
  }

  auto cells_across = [&](double width) {
    return std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(width / epsilon - 1e-12)));
  };
  std::size_t ncols = cells_across(tr.width());
  std::size_t nrows = cells_across(std::max(vr.width(), epsilon));

  std::vector<BuyerType> atoms;
  double total = 0.0;
  double eta = 0.0;
  for (std::size_t a = 0; a < ncols; ++a) {
    double t0 = tr.lo + static_cast<double>(a) * epsilon;
    double t1 = std::min(t0 + epsilon, tr.hi);
    double column_mass = 0.0;
    for (std::size_t b = 0; b < nrows; ++b) {
      double v0 = vr.lo + static_cast<double>(b) * epsilon;
      double v1 = std::min(v0 + epsilon, vr.hi);
      if (!(v1 > v0)) continue;
      auto strip = [&](double theta) {
        auto f = [&](double v) { return c.density(theta, v); };
        std::vector<double> breaks;
        for (double x : c.v_breaks(theta)) breaks.push_back(x);
        return integrate(f, v0, v1, breaks, {.abs_tol = 1e-12});
      };
      double mass =
          integrate(strip, t0, t1, c.theta_breaks(), {.abs_tol = 1e-10});
      total += mass;
      column_mass += mass;
      if (mass > 1e-12) {
        atoms.push_back(BuyerType{t1, v0, mass});
      }
    }
    eta = std::max(eta, column_mass);
  }

  double defect = 1.0 - total;
  if (atoms.empty() || !(total > 0.0)) {
    throw std::invalid_argument("discretization produced no mass");
  }
  double kept = 0.0;
  for (const BuyerType& t : atoms) kept += t.prob;
  for (BuyerType& t : atoms) t.prob /= kept;

  DiscretizationResult result{DiscreteTypeDistribution(std::move(atoms)),
                              epsilon, eta, eta * vr.hi + epsilon, defect};
  return result;
}

CertifiedSolve certified_solve(const ContinuousDistribution& c,
                               double epsilon) {
  DiscretizationResult d = discretize(c, epsilon);
  SolveResult result = solve_optimal(d.dist);
  double vmax = c.v_range().hi;
  double revenue = result.optimal_value;
  double bound = d.eta * vmax + epsilon;
  double lo = revenue - d.eta * vmax;
  double hi = revenue + epsilon;
  return CertifiedSolve{std::move(d), std::move(result), bound, lo, hi};
}

}  // namespace timeprice
