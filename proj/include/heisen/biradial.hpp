#pragma once

// The biradial transform G and its calculus on a fixed spectral grid:
// analysis against the Laguerre modes ell_n^lambda, synthesis, Plancherel and
// Parseval sums, the spectral form of group dilation, and the exact
// frequency-side action of multiplication by Z = is - |z|^2/4.
//
// Conventions (fixed project-wide):
//   partial Fourier transform in the center:  fhat(rho, lambda) =
//       integral e^{+i lambda s} f(rho, s) ds,
//   modes:  ell_n^lambda(z, s) = C_n^{-1} e^{-i lambda s - |lambda||z|^2/4}
//       L_n^{d-1}(|lambda||z|^2/2),  C_n = binom(d-1+n, n),
//   coefficients:  Gf(n, lambda) = <ell_n^lambda, f>  (conjugate-linear in
//       the first slot), diagonalizing phi(-Delta) as multiplication by
//       phi(|lambda|(d+2n)).

#include <complex>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "heisen/grid.hpp"
#include "heisen/group.hpp"

namespace heisen::biradial {

using cplx = std::complex<double>;

// Thrown when the share of spectral mass sitting in the top Laguerre row
// exceeds the caller's tolerance: results computed from such data would be
// silently truncation-biased.
class TailError : public std::runtime_error {
 public:
  TailError(const std::string& what, double tail)
      : std::runtime_error(what), tail_(tail) {}
  double tail() const { return tail_; }

 private:
  double tail_;
};

// Coefficient table F(n, lambda_j), rows n = 0..n_max plus optional buffer
// rows past n_max (consumed one per mult_by_Z application by the lambda<0
// difference, which reads row n+1).  Channels 1..jet_order hold analytic
// lambda-derivatives of channel 0; operations that need d/dlambda use them
// when present and fall back to finite differences in log|lambda| otherwise.
class BiradialFunction {
 public:
  explicit BiradialFunction(SpectralGrid grid, int jet_order = 0,
                            int buffer_rows = 0);

  const SpectralGrid& grid() const { return grid_; }
  int jet_order() const { return jet_order_; }
  int buffer_rows() const { return buffer_rows_; }
  int rows() const { return grid_.n_max + 1 + buffer_rows_; }

  cplx& at(int n, int j, int channel = 0) {
    return channels_[channel][static_cast<size_t>(n) * grid_.size() + j];
  }
  cplx at(int n, int j, int channel = 0) const {
    return channels_[channel][static_cast<size_t>(n) * grid_.size() + j];
  }

  // Share of the measure-weighted squared mass (rows 0..n_max) carried by
  // row n_max; 0 for identically-zero data.
  double tail_estimate() const;

  // d/dlambda of the given channel at (n, j): next analytic channel if
  // stored, else a 4th-order stencil in log|lambda| (one-sided at block ends).
  cplx lambda_derivative(int n, int j, int channel = 0) const;

  // Largest relative gap between channel 1 and finite differences of channel
  // 0 over interior nodes; diagnostic for the analytic-derivative invariant.
  double derivative_channel_deviation() const;

  bool same_grid(const BiradialFunction& o) const { return grid_ == o.grid_; }

 private:
  SpectralGrid grid_;
  int jet_order_;
  int buffer_rows_;
  std::vector<std::vector<cplx>> channels_;
};

// Input to analysis: either the partial Fourier transform fhat (exact in s,
// preferred) or position-space values plus a truncation window; exactly one
// must be set.  decay_radius declares where |f| has fallen below 1e-14 so the
// radial quadrature span can be sanity-checked.
struct BiradialInput {
  std::function<cplx(double rho, double lambda)> fhat;
  std::function<cplx(double rho, double s)> f;
  double s_window = 0;
  double decay_radius = 0;
};

struct AnalyzeOptions {
  int radial_nodes = 0;    // 0: grid.n_max + 60
  int s_nodes = 0;         // 0: sized from the window and |lambda|
  double tail_tol = 1e-3;  // TailError above this
};

BiradialFunction analyze(const BiradialInput& input, const SpectralGrid& grid,
                         const AnalyzeOptions& opt = {});

// Inverse transform at a point: sum_j w_j sum_n F(n, lambda_j) e^{-i lambda_j s}
// e^{-|lambda_j| rho^2/4} L_n^{d-1}(|lambda_j| rho^2/2).
cplx synthesize(const BiradialFunction& F, double rho, double s);
cplx synthesize(const BiradialFunction& F, const group::GroupPoint& p);

// sqrt of (2pi)^{-(d+1)} integral |lambda|^d sum_n C_n |F|^2 dlambda.
double plancherel_norm(const BiradialFunction& F);
// (2pi)^{-(d+1)} integral |lambda|^d sum_n C_n conj(F) G dlambda.
cplx parseval(const BiradialFunction& F, const BiradialFunction& G);

// Spectral side of group dilation: result(n, lambda) = F(n, t^2 lambda), so
// that synthesize(result, v) = t^{-Q} synthesize(F, delta_{1/t} v).  Exact
// re-indexing when t^2 is a power of the grid ratio, cubic interpolation in
// log|lambda| otherwise.  Samples pushed past the grid edge are zero-extended
// only when the edge row is already below edge_tol; otherwise the call fails.
struct DilateOptions {
  double edge_tol = 1e-12;
};
BiradialFunction dilate_spectral(const BiradialFunction& F, double t,
                                 const DilateOptions& opt = {});

// Frequency-side multiplication by Z = is - |z|^2/4:
//   lambda > 0: (ZF)(n) = dF/dlambda - (n/lambda)(F(n) - F(n-1))
//   lambda < 0: (ZF)(n) = dF/dlambda - ((d+n)/lambda)(F(n+1) - F(n))
// The lambda<0 row n_max needs F(n_max+1): a buffer row is consumed when one
// is present; otherwise the row is treated as zero, which is legitimate only
// when tail_estimate() is below tail_tol (else TailError).  Analytic
// derivative channels propagate through with one order consumed.
struct ZOptions {
  double tail_tol = 1e-3;
};
BiradialFunction mult_by_Z(const BiradialFunction& F, const ZOptions& opt = {});

// plancherel_norm(Z^m F) = L^2 norm of (is - |z|^2/4)^m G^{-1}F.
double moment_norm(const BiradialFunction& F, int m, const ZOptions& opt = {});

// Multiplicity binom(d-1+n, n) of the frequency |lambda|(d+2n).
double laguerre_multiplicity(int d, int n);

// Rows 0..n_max as CSV: header n,lambda,re,im,re_dlambda,im_dlambda with the
// derivative columns from lambda_derivative (analytic when available).
void dump_csv(const BiradialFunction& F, std::ostream& os);

}  // namespace heisen::biradial
