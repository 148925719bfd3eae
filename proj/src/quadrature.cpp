#include "timeprice/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace timeprice {

namespace {

struct Workspace {
  const std::function<double(double)>& f;
  const QuadratureOptions& opt;
  long evals = 0;

  double eval(double x) {
    if (++evals > opt.max_evals) {
      throw QuadratureError("integration evaluation budget exceeded");
    }
    return f(x);
  }

  // Classic adaptive Simpson with tolerance halving.
  double refine(double a, double b, double fa, double fm, double fb, double s,
                double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = eval(lm);
    double frm = eval(rm);
    double sl = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double sr = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double err = sl + sr - s;
    if (std::fabs(err) <= 15.0 * tol || b - a < 1e-14 * (1.0 + std::fabs(a))) {
      return sl + sr + err / 15.0;
    }
    if (depth >= opt.max_depth) {
      throw QuadratureError("integration failed to converge");
    }
    return refine(a, m, fa, flm, fm, sl, 0.5 * tol, depth + 1) +
           refine(m, b, fm, frm, fb, sr, 0.5 * tol, depth + 1);
  }

  double piece(double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    double m = 0.5 * (a + b);
    double fa = eval(a);
    double fm = eval(m);
    double fb = eval(b);
    double s = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return refine(a, b, fa, fm, fb, s, tol, 0);
  }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breakpoints,
                 const QuadratureOptions& opt) {
  if (!(b > a)) return 0.0;
  std::vector<double> cuts{a, b};
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  Workspace ws{f, opt};
  double total = 0.0;
  double tol = opt.abs_tol / static_cast<double>(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += ws.piece(cuts[i], cuts[i + 1], tol);
  }
  return total;
}

}  // namespace timeprice
