#ifndef TIMEPRICE_QUADRATURE_HPP
#define TIMEPRICE_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace timeprice {

// Thrown when adaptive integration cannot reach the requested tolerance
// within its evaluation budget.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_depth = 48;
  long max_evals = 4'000'000;
};

// Adaptive Simpson over [a, b], subdivided first at the given breakpoints
// (values outside (a, b) are ignored).
double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breakpoints,
                 const QuadratureOptions& opt = {});

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, const QuadratureOptions& opt = {}) {
  return integrate(f, a, b, {}, opt);
}

}  // namespace timeprice

#endif  // TIMEPRICE_QUADRATURE_HPP
