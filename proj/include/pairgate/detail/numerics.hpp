#pragma once

// Small numerical kernels shared across the library: bracketed root finding,
// golden-section minimization, adaptive Gauss-Kronrod quadrature with
// absolute-tolerance semantics, and a damped Newton iteration in the complex
// plane. Nothing here knows about the physics.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pairgate::detail {

// Bisection/secant hybrid on a bracketing interval [lo, hi] with f(lo)*f(hi)
// <= 0. Converges to rel_tol on the abscissa (plus a small absolute floor).
template <class F>
double brent_root(F&& f, double lo, double hi, double f_lo, double f_hi,
                  double rel_tol = 1e-12) {
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (f_lo * f_hi > 0.0)
    throw std::invalid_argument("brent_root: endpoints do not bracket");
  double a = lo, b = hi, fa = f_lo, fb = f_hi;
  // keep |f(b)| <= |f(a)|
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa;  // previous iterate
  for (int it = 0; it < 200; ++it) {
    const double tol =
        rel_tol * std::max(std::abs(b), 1.0) + std::numeric_limits<double>::min();
    if (std::abs(a - b) <= 2.0 * tol || fb == 0.0) return b;
    double s;
    if (fa != fc && fb != fc) {
      // inverse quadratic
      s = a * fb * fc / ((fa - fb) * (fa - fc)) +
          b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);  // secant
    }
    const double mid = 0.5 * (a + b);
    const bool inside = (s > std::min(b, mid) && s < std::max(b, mid));
    if (!inside) s = mid;  // fall back to bisection
    const double fs = f(s);
    c = b;
    fc = fb;
    if (fa * fs <= 0.0) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::abs(fa) < std::abs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  return b;
}

template <class F>
double brent_root(F&& f, double lo, double hi, double rel_tol = 1e-12) {
  return brent_root(f, lo, hi, f(lo), f(hi), rel_tol);
}

// Golden-section minimum of a unimodal f on [lo, hi]; the bracket hugs a
// boundary minimum, which the critical-momentum search relies on.
template <class F>
std::pair<double, double> golden_min(F&& f, double lo, double hi,
                                     double x_tol = 1e-6) {
  constexpr double g = 0.6180339887498949;  // (sqrt(5)-1)/2
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > x_tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (lo + hi);
  return {xm, f(xm)};
}

// Gauss-Kronrod 7/15 pair on [-1, 1]; error from |K15 - G7|.
struct gk15_nodes {
  // Kronrod abscissae (positive half) and weights; Gauss weights at the
  // embedded nodes (odd Kronrod indices).
  static constexpr std::array<double, 8> xk = {
      0.991455371120813, 0.949107912342759, 0.864864423359769,
      0.741531185599394, 0.586087235467691, 0.405845151377397,
      0.207784955007898, 0.0};
  static constexpr std::array<double, 8> wk = {
      0.022935322010529, 0.063092092629979, 0.104790010322250,
      0.140653259715525, 0.169004726639267, 0.190350578064785,
      0.204432940075298, 0.209482141084728};
  static constexpr std::array<double, 4> wg = {
      0.129484966168870, 0.279705391489277, 0.381830050505119,
      0.417959183673469};
};

template <class F>
void gk15_panel(F&& f, double a, double b, double& integral, double& error) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double k = 0.0, g = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * gk15_nodes::xk[i];
    const double fv = f(c - dx) + f(c + dx);
    k += gk15_nodes::wk[i] * fv;
    if (i % 2 == 1) g += gk15_nodes::wg[i / 2] * fv;
  }
  const double fc = f(c);
  k += gk15_nodes::wk[7] * fc;
  g += gk15_nodes::wg[3] * fc;
  integral = h * k;
  // standard (200 |K-G|)^{3/2} sharpening of the raw difference
  const double diff = std::abs(h * (k - g));
  error = std::min(diff, std::pow(200.0 * diff, 1.5));
}

struct quad_result {
  double value = 0.0;
  double error = 0.0;  // accumulated estimate, <= requested abs_tol on success
};

// Adaptive bisection to an absolute tolerance. Throws on pathological
// non-convergence (interval budget exhausted).
template <class F>
quad_result integrate_adaptive(F&& f, double a, double b, double abs_tol) {
  if (a == b) return {0.0, 0.0};
  struct seg {
    double a, b, val, err;
  };
  std::vector<seg> stack;
  double v0, e0;
  gk15_panel(f, a, b, v0, e0);
  stack.push_back({a, b, v0, e0});
  quad_result done{0.0, 0.0};
  const double span = std::abs(b - a);
  int budget = 20000;
  while (!stack.empty()) {
    if (--budget < 0)
      throw std::runtime_error("integrate_adaptive: interval budget exhausted");
    const seg s = stack.back();
    stack.pop_back();
    const double local_tol = abs_tol * std::abs(s.b - s.a) / span;
    if (s.err <= std::max(local_tol, 1e-300) ||
        std::abs(s.b - s.a) < 1e-14 * span) {
      done.value += s.val;
      done.error += s.err;
      continue;
    }
    const double m = 0.5 * (s.a + s.b);
    double vl, el, vr, er;
    gk15_panel(f, s.a, m, vl, el);
    gk15_panel(f, m, s.b, vr, er);
    stack.push_back({s.a, m, vl, el});
    stack.push_back({m, s.b, vr, er});
  }
  return done;
}

// Damped Newton for analytic g: step halved while the residual grows.
// Converges when |g| <= tol; throws runtime_error otherwise.
template <class G, class DG>
std::complex<double> newton_complex(G&& g, DG&& dg, std::complex<double> z0,
                                    double tol, int max_iter = 100) {
  std::complex<double> z = z0;
  std::complex<double> r = g(z);
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(r) <= tol) return z;
    const std::complex<double> d = dg(z);
    if (d == std::complex<double>(0.0, 0.0))
      throw std::runtime_error("newton_complex: vanishing derivative");
    const std::complex<double> step = -r / d;
    double lambda = 1.0;
    std::complex<double> zn = z + step, rn = g(zn);
    int halvings = 0;
    while (std::abs(rn) > std::abs(r) && halvings < 60) {
      lambda *= 0.5;
      zn = z + lambda * step;
      rn = g(zn);
      ++halvings;
    }
    z = zn;
    r = rn;
  }
  if (std::abs(r) <= tol) return z;
  throw std::runtime_error("newton_complex: no convergence");
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton on the Legendre recurrence.
inline void gauss_legendre(int n, std::vector<double>& x,
                           std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

}  // namespace pairgate::detail
