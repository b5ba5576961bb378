#pragma once
// Small numerical utilities shared across the library: least-squares fits,
// finite-difference weights, a deterministic RNG wrapper, and compensated
// (double-double) phase evaluation for unimodular multipliers.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace heisen::num {

using cplx = std::complex<double>;

// ---------------------------------------------------------------- fitting

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

// Ordinary least squares y ~ slope*x + intercept.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Fit log(y) ~ slope*log(x) + c.  All x, y must be positive.
LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

// ------------------------------------------------- finite-difference weights

// Fornberg weights for the m-th derivative at 0 on the given nodes.
// Exact for polynomials of degree <= nodes.size()-1.
std::vector<double> fd_weights(int m, const std::vector<double>& nodes);

// Symmetric integer-offset stencil -half..half scaled by h.
std::vector<double> symmetric_stencil_nodes(int half, double h);

// ------------------------------------------------------------------- RNG

// Thin deterministic wrapper over mt19937_64; the uniform mapping is done by
// hand so output does not depend on the standard library's distribution
// implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  std::uint64_t bits() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// ------------------------------------------------- compensated phase (dd)

// Double-double value hi+lo with |lo| <= ulp(hi)/2.
struct Dd {
  double hi = 0;
  double lo = 0;
};

Dd dd_two_sum(double a, double b);
Dd dd_add(Dd a, Dd b);
Dd dd_sub(Dd a, Dd b);
Dd dd_two_prod(double a, double b);
Dd dd_mul(Dd a, Dd b);
Dd dd_mul_d(Dd a, double b);

// sigma^nu as a double-double, exact-ish for nu in {1/2, 1, 2}; for other nu
// falls back to a plain pow (single rounding).
Dd dd_pow_sigma(double sigma, double nu);

// Reduce a double-double angle modulo 2*pi into (-pi, pi].
double dd_mod_2pi(Dd theta);

// exp(i * t * sigma^nu) with the phase accumulated and reduced in
// double-double arithmetic, so that phases computed for t1, t2 and t1+t2 are
// consistent to ~1e-18 even when t*sigma^nu ~ 1e12.  This is what makes
// semigroup checks meaningful at large sigma.
cplx unit_phase(double t, double sigma, double nu);

// Phase angle itself (reduced), used to build derivative jets around an
// accurately computed base phase.
double phase_angle(double t, double sigma, double nu);

// ---------------------------------------------------------------- misc

// Trapezoid weights on a uniform grid of n nodes with spacing h.
std::vector<double> trapezoid_weights(int n, double h);

double binomial(double a, int k);  // generalized C(a, k), k >= 0

}  // namespace heisen::num
