#pragma once

#include <vector>

namespace heisen::biradial {

// Signed log-spaced frequency grid carrying quadrature weights for the
// spectral measure |lambda|^d dlambda / (2pi)^{d+1}.
//
// Nodes are stored ascending: the negative block first (-lambda_max up to
// -lambda_min), then the positive block (lambda_min up to lambda_max).  Within
// each block |lambda| runs over lambda_min * 2^{i/q} for a "ladder" index
// i = 0..per_sign-1; the integer q is chosen so the requested span is met as
// closely as possible.  Pinning the ratio to a root of 2 makes dilation by any
// t with t^2 = 2^{k/q} an exact re-indexing instead of an interpolation.
struct SpectralGrid {
  int d = 1;
  int n_max = 0;  // Laguerre truncation index
  int per_sign = 0;
  int q = 1;             // nodes per octave: |lambda| ratio is 2^{1/q}
  double log_step = 0;   // ln(2)/q
  double lambda_min = 0;
  double lambda_max = 0;              // realized top node (snapped)
  std::vector<double> lambdas;        // ascending, nonzero
  std::vector<double> weights;        // positive; measure prefactor folded in

  // Trapezoid-in-log weights; requested lambda_max is adjusted to the nearest
  // value reachable with the snapped ratio.
  static SpectralGrid logarithmic(int d, double lambda_min, double lambda_max,
                                  int per_sign, int n_max);

  int size() const { return static_cast<int>(lambdas.size()); }

  // block 0: negative lambdas, block 1: positive
  int block(int j) const { return j < per_sign ? 0 : 1; }
  // position along the |lambda| ladder, 0 at lambda_min
  int ladder(int j) const { return j < per_sign ? per_sign - 1 - j : j - per_sign; }
  int node(int block, int ladder) const {
    return block == 0 ? per_sign - 1 - ladder : per_sign + ladder;
  }

  // True iff dilation lambda -> t^2 lambda lands on grid nodes exactly; then
  // *shift is the signed ladder displacement.
  bool dilation_shift(double t, int* shift) const;

  friend bool operator==(const SpectralGrid&, const SpectralGrid&) = default;
};

}  // namespace heisen::biradial
