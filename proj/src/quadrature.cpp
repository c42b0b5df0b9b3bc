#include "gentile/quadrature.hpp"

#include <cmath>
#include <cstdlib>

#include "gentile/errors.hpp"

namespace gentile {
namespace {

// Kronrod 15-point nodes/weights on [-1,1] (positive half) and the
// embedded Gauss 7-point weights. Values from the QUADPACK tables.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resg = 0.0;
  double resk = 0.0;

  const double fc = f(c);
  resk = kWgk[7] * fc;
  resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  const double err = std::abs((resk - resg) * h);
  return {resk * h, err};
}

struct Adapter {
  const std::function<double(double)>& f;
  double rel_tol;
  double abs_tol;
  int evaluations = 0;

  double recurse(double a, double b, const PanelResult& whole, double total,
                 int depth, double* err_out) {
    const double tol = std::max(abs_tol, rel_tol * std::abs(total));
    if (whole.error <= tol * (b - a) / span || depth <= 0) {
      if (depth <= 0 && whole.error > tol * (b - a) / span) depth_exhausted = true;
      *err_out = whole.error;
      return whole.kronrod;
    }
    const double c = 0.5 * (a + b);
    const PanelResult left = gk15(f, a, c);
    const PanelResult right = gk15(f, c, b);
    evaluations += 30;
    double el = 0.0, er = 0.0;
    const double better = left.kronrod + right.kronrod;
    const double vl = recurse(a, c, left, total - whole.kronrod + better, depth - 1, &el);
    const double vr = recurse(c, b, right, total - whole.kronrod + better, depth - 1, &er);
    *err_out = el + er;
    return vl + vr;
  }

  double span = 1.0;
  bool depth_exhausted = false;
};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double rel_tol, double abs_tol,
                              int max_depth) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  Adapter ad{f, rel_tol, abs_tol};
  ad.span = b - a;
  const PanelResult whole = gk15(f, a, b);
  ad.evaluations = 15;
  double err = 0.0;
  out.value = ad.recurse(a, b, whole, whole.kronrod, max_depth, &err);
  out.abs_error = err;
  out.evaluations = ad.evaluations;
  out.converged =
      !ad.depth_exhausted &&
      (err <= std::max(abs_tol, rel_tol * std::abs(out.value)) || err == 0.0);
  return out;
}

}  // namespace gentile
