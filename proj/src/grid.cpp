#include "heisen/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace heisen::biradial {

SpectralGrid SpectralGrid::logarithmic(int d, double lambda_min,
                                       double lambda_max, int per_sign,
                                       int n_max) {
  if (d < 1) throw std::invalid_argument("SpectralGrid: d must be >= 1");
  if (n_max < 0) throw std::invalid_argument("SpectralGrid: n_max must be >= 0");
  if (per_sign < 2) throw std::invalid_argument("SpectralGrid: per_sign must be >= 2");
  if (!(lambda_min > 0) || !(lambda_max > lambda_min))
    throw std::invalid_argument("SpectralGrid: need 0 < lambda_min < lambda_max");

  SpectralGrid g;
  g.d = d;
  g.n_max = n_max;
  g.per_sign = per_sign;
  const double octaves = std::log2(lambda_max / lambda_min);
  g.q = std::max(1, static_cast<int>(std::lround((per_sign - 1) / octaves)));
  g.log_step = M_LN2 / g.q;
  g.lambda_min = lambda_min;
  g.lambda_max = lambda_min * std::exp2(static_cast<double>(per_sign - 1) / g.q);

  g.lambdas.resize(2 * per_sign);
  g.weights.resize(2 * per_sign);
  const double prefactor =
      g.log_step / std::pow(2.0 * M_PI, d + 1);  // du / (2pi)^{d+1}
  for (int i = 0; i < per_sign; ++i) {
    const double mag = lambda_min * std::exp2(static_cast<double>(i) / g.q);
    const double trap = (i == 0 || i == per_sign - 1) ? 0.5 : 1.0;
    // |lambda|^d dlambda = |lambda|^{d+1} du on each sign
    const double w = prefactor * trap * std::pow(mag, d + 1);
    g.lambdas[per_sign + i] = mag;        // positive block, ascending
    g.weights[per_sign + i] = w;
    g.lambdas[per_sign - 1 - i] = -mag;   // negative block, mirrored
    g.weights[per_sign - 1 - i] = w;
  }
  return g;
}

bool SpectralGrid::dilation_shift(double t, int* shift) const {
  if (t == 0) throw std::invalid_argument("dilation_shift: t must be nonzero");
  const double steps = 2.0 * q * std::log2(std::abs(t));  // t^2 = 2^{steps/q}
  const double rounded = std::lround(steps);
  if (std::abs(steps - rounded) > 1e-9) return false;
  if (shift) *shift = static_cast<int>(rounded);
  return true;
}

}  // namespace heisen::biradial
