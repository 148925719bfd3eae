#ifndef TIMEPRICE_DISCRETIZER_HPP
#define TIMEPRICE_DISCRETIZER_HPP

#include "timeprice/solver.hpp"
#include "timeprice/types.hpp"

namespace timeprice {

struct DiscretizationResult {
  DiscreteTypeDistribution dist;
  double epsilon = 0.0;
  double eta = 0.0;          // max column mass, pre-normalization
  double error_bound = 0.0;  // eta * v_max + epsilon
  double defect = 0.0;       // 1 - integrated mass before renormalization
};

// Snaps each epsilon-cell's mass to an atom at the cell's right-bottom
// corner. The grid is anchored at the support rectangle's lower-left corner.
// Throws std::invalid_argument if epsilon exceeds the support width and
// QuadratureError if a cell integral fails to converge.
DiscretizationResult discretize(const ContinuousDistribution& c,
                                double epsilon);

struct CertifiedSolve {
  DiscretizationResult discretization;
  SolveResult result;
  double bound = 0.0;         // headline eta * v_max + epsilon
  double continuum_lo = 0.0;  // revenue - eta * v_max
  double continuum_hi = 0.0;  // revenue + epsilon
};

// Discretizes, runs the exact solver, and reports the interval that is
// guaranteed to contain the continuous optimum:
// revenue - eta * v_max <= OPT_C <= revenue + epsilon.
CertifiedSolve certified_solve(const ContinuousDistribution& c,
                               double epsilon);

}  // namespace timeprice

#endif  // TIMEPRICE_DISCRETIZER_HPP
