#include "heisen/numutil.hpp"

#include <cassert>
#include <stdexcept>

namespace heisen::num {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need >= 2 matching samples");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double vxx = sxx - sx * sx / n;
  const double vxy = sxy - sx * sy / n;
  const double vyy = syy - sy * sy / n;
  if (vxx <= 0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit f;
  f.slope = vxy / vxx;
  f.intercept = (sy - f.slope * sx) / n;
  f.r2 = (vyy > 0) ? (vxy * vxy) / (vxx * vyy) : 1.0;
  return f;
}

LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx(x.size()), ly(y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0)
      throw std::invalid_argument("fit_loglog: samples must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return fit_line(lx, ly);
}

// Fornberg's recursion (generation of finite difference formulas on
// arbitrarily spaced grids, Math. Comp. 51, 1988).
std::vector<double> fd_weights(int m, const std::vector<double>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (m < 0 || n < m + 1)
    throw std::invalid_argument("fd_weights: need at least m+1 nodes");
  // c[k][j]: weight of node j for the k-th derivative, built incrementally.
  std::vector<std::vector<double>> c(m + 1, std::vector<double>(n, 0.0));
  double c1 = 1.0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    double c2 = 1.0;
    const int mn = std::min(i, m);
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[k][i] = c1 * (k * c[k - 1][i - 1] - nodes[i - 1] * c[k][i - 1]) / c2;
        c[0][i] = -c1 * nodes[i - 1] * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[k][j] = (nodes[i] * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = nodes[i] * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c[m];
}

std::vector<double> symmetric_stencil_nodes(int half, double h) {
  std::vector<double> nodes;
  nodes.reserve(2 * half + 1);
  for (int j = -half; j <= half; ++j) nodes.push_back(j * h);
  return nodes;
}

// ----------------------------------------------------------------- dd ops

Dd dd_two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

Dd dd_add(Dd a, Dd b) {
  Dd s = dd_two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  Dd t = dd_two_sum(s.hi, s.lo);
  return t;
}

Dd dd_sub(Dd a, Dd b) { return dd_add(a, Dd{-b.hi, -b.lo}); }

Dd dd_two_prod(double a, double b) {
  const double p = a * b;
  const double err = std::fma(a, b, -p);
  return {p, err};
}

Dd dd_mul(Dd a, Dd b) {
  Dd p = dd_two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return dd_two_sum(p.hi, p.lo);
}

Dd dd_mul_d(Dd a, double b) {
  Dd p = dd_two_prod(a.hi, b);
  p.lo += a.lo * b;
  return dd_two_sum(p.hi, p.lo);
}

Dd dd_pow_sigma(double sigma, double nu) {
  if (nu == 1.0) return {sigma, 0.0};
  if (nu == 2.0) return dd_two_prod(sigma, sigma);
  if (nu == 0.5) {
    const double r = std::sqrt(sigma);
    if (r == 0) return {0.0, 0.0};
    // One correction step: sigma - r*r evaluated exactly, divided by 2r.
    Dd rr = dd_two_prod(r, r);
    const double corr = ((sigma - rr.hi) - rr.lo) / (2.0 * r);
    return dd_two_sum(r, corr);
  }
  return {std::pow(sigma, nu), 0.0};
}

namespace {
// 2*pi split into high/low doubles.
constexpr double kTwoPiHi = 6.283185307179586232e+00;
constexpr double kTwoPiLo = 2.449293598294706414e-16;
}  // namespace

double dd_mod_2pi(Dd theta) {
  const double k = std::nearbyint(theta.hi / kTwoPiHi);
  if (k == 0) return theta.hi + theta.lo;
  Dd kk{k, 0.0};
  Dd prod = dd_mul(kk, Dd{kTwoPiHi, kTwoPiLo});
  Dd r = dd_sub(theta, prod);
  return r.hi + r.lo;
}

cplx unit_phase(double t, double sigma, double nu) {
  const double a = phase_angle(t, sigma, nu);
  return {std::cos(a), std::sin(a)};
}

double phase_angle(double t, double sigma, double nu) {
  Dd p = dd_pow_sigma(sigma, nu);
  Dd theta = dd_mul_d(p, t);
  return dd_mod_2pi(theta);
}

std::vector<double> trapezoid_weights(int n, double h) {
  if (n < 2) throw std::invalid_argument("trapezoid_weights: need n >= 2");
  std::vector<double> w(n, h);
  w.front() = w.back() = 0.5 * h;
  return w;
}

double binomial(double a, int k) {
  if (k < 0) return 0.0;
  double v = 1.0;
  for (int j = 0; j < k; ++j) v *= (a - j) / (j + 1);
  return v;
}

}  // namespace heisen::num
