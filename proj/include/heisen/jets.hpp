#pragma once
// Truncated Taylor ("jet") arithmetic of fixed order 4 over complex<double>.
// A Jet holds the Taylor coefficients c[k] = f^(k)(x0)/k! of a function along
// one real parameter.  Multiplier symbols are written once against jets and
// thereby expose analytic derivatives up to order 4 without hand-derived
// chain rules.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace heisen::num {

inline constexpr int kJetOrder = 4;

struct Jet {
  std::array<std::complex<double>, kJetOrder + 1> c{};

  static Jet constant(std::complex<double> v) {
    Jet j;
    j.c[0] = v;
    return j;
  }
  // The identity function evaluated at x0: x0 + 1*dx.
  static Jet variable(double x0) {
    Jet j;
    j.c[0] = x0;
    j.c[1] = 1.0;
    return j;
  }
  std::complex<double> value() const { return c[0]; }
  // Plain derivative f^(k)(x0) (Taylor coefficient times k!).
  std::complex<double> derivative(int k) const {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return c[k] * f;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}
inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}
inline Jet operator-(const Jet& a) {
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k) r.c[k] = -a.c[k];
  return r;
}
inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k)
    for (int j = 0; j <= k; ++j) r.c[k] += a.c[j] * b.c[k - j];
  return r;
}
inline Jet operator*(std::complex<double> s, const Jet& a) {
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k) r.c[k] = s * a.c[k];
  return r;
}
inline Jet operator*(double s, const Jet& a) { return std::complex<double>(s) * a; }
inline Jet operator+(std::complex<double> s, const Jet& a) {
  Jet r = a;
  r.c[0] += s;
  return r;
}
inline Jet operator+(double s, const Jet& a) { return std::complex<double>(s) + a; }
inline Jet operator-(double s, const Jet& a) { return std::complex<double>(s) + (-a); }

// Compose a univariate function with known local Taylor coefficients
// f_k = f^(k)(g0)/k! around the jet's value: result = sum_k f_k (g - g0)^k.
inline Jet jet_compose(const Jet& g,
                       const std::array<std::complex<double>, kJetOrder + 1>& f) {
  Jet delta = g;
  delta.c[0] = 0.0;
  // Horner evaluation in the (nilpotent) delta.
  Jet r = Jet::constant(f[kJetOrder]);
  for (int k = kJetOrder - 1; k >= 0; --k) {
    r = r * delta;
    r.c[0] += f[k];
  }
  return r;
}

inline Jet jet_exp(const Jet& g) {
  const std::complex<double> e = std::exp(g.c[0]);
  std::array<std::complex<double>, kJetOrder + 1> f;
  double fact = 1;
  for (int k = 0; k <= kJetOrder; ++k) {
    if (k > 0) fact *= k;
    f[k] = e / fact;
  }
  return jet_compose(g, f);
}

// exp with the constant term supplied externally (e.g. a compensated phase
// factor): exp_base * exp(g - g.c[0]).
inline Jet jet_exp_rebased(const Jet& g, std::complex<double> exp_base) {
  Jet d = g;
  d.c[0] = 0.0;
  Jet r = jet_exp(d);
  return exp_base * r;
}

inline Jet jet_inv(const Jet& g) {
  const std::complex<double> v = g.c[0];
  if (v == 0.0) throw std::domain_error("jet_inv: value is zero");
  std::array<std::complex<double>, kJetOrder + 1> f;
  std::complex<double> p = 1.0 / v;
  for (int k = 0; k <= kJetOrder; ++k) {
    f[k] = p * (k % 2 == 0 ? 1.0 : -1.0);
    p /= v;
  }
  return jet_compose(g, f);
}

// g^p for real exponent p; requires a strictly positive real part at the base
// point in the intended uses (sigma > 0).
inline Jet jet_pow(const Jet& g, double p) {
  const std::complex<double> v = g.c[0];
  if (v == 0.0) {
    if (p < kJetOrder + 0.5 && std::floor(p) != p)
      throw std::domain_error("jet_pow: fractional power at zero");
  }
  std::array<std::complex<double>, kJetOrder + 1> f;
  std::complex<double> coeff = std::pow(v, p);
  double fact = 1;
  double falling = 1;
  for (int k = 0; k <= kJetOrder; ++k) {
    if (k > 0) {
      fact *= k;
      falling *= (p - (k - 1));
      coeff = std::pow(v, p - k);
    }
    f[k] = (k == 0) ? std::pow(v, p) : falling * coeff / fact;
  }
  return jet_compose(g, f);
}

}  // namespace heisen::num
