#include "heisen/biradial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "heisen/numutil.hpp"
#include "heisen/special.hpp"

namespace heisen::biradial {

BiradialFunction::BiradialFunction(SpectralGrid grid, int jet_order,
                                   int buffer_rows)
    : grid_(std::move(grid)), jet_order_(jet_order), buffer_rows_(buffer_rows) {
  if (jet_order < 0 || buffer_rows < 0)
    throw std::invalid_argument("BiradialFunction: negative jet/buffer");
  channels_.assign(jet_order_ + 1,
                   std::vector<cplx>(static_cast<size_t>(rows()) * grid_.size()));
}

double laguerre_multiplicity(int d, int n) {
  double c = 1.0;
  for (int k = 1; k < d; ++k) c *= static_cast<double>(n + k) / k;
  return c;
}

double BiradialFunction::tail_estimate() const {
  double total = 0, top = 0;
  for (int n = 0; n <= grid_.n_max; ++n) {
    const double cn = laguerre_multiplicity(grid_.d, n);
    double mass = 0;
    for (int j = 0; j < grid_.size(); ++j)
      mass += grid_.weights[j] * std::norm(at(n, j));
    mass *= cn;
    total += mass;
    if (n == grid_.n_max) top = mass;
  }
  return total > 0 ? top / total : 0.0;
}

cplx BiradialFunction::lambda_derivative(int n, int j, int channel) const {
  if (channel + 1 <= jet_order_) return at(n, j, channel + 1);
  // finite differences in u = log|lambda| along the node's sign block;
  // d lambda/du = lambda on either block, so d/dlambda = (1/lambda) d/du
  const int P = grid_.per_sign;
  const int b = grid_.block(j);
  const int p = grid_.ladder(j);
  const int window = std::min(5, P);
  const int lo = std::clamp(p - window / 2, 0, P - window);
  std::vector<double> nodes(window);
  for (int i = 0; i < window; ++i) nodes[i] = (lo + i - p) * grid_.log_step;
  const std::vector<double> w = num::fd_weights(1, nodes);
  cplx du = 0;
  for (int i = 0; i < window; ++i)
    du += w[i] * at(n, grid_.node(b, lo + i), channel);
  return du / grid_.lambdas[j];
}

double BiradialFunction::derivative_channel_deviation() const {
  if (jet_order_ < 1) return 0.0;
  const int P = grid_.per_sign;
  double worst = 0;
  for (int n = 0; n < rows(); ++n) {
    double scale = 0;
    for (int j = 0; j < grid_.size(); ++j)
      scale = std::max(scale, std::abs(at(n, j, 1)));
    if (scale == 0) continue;
    for (int b = 0; b < 2; ++b) {
      for (int p = 2; p < P - 2; ++p) {
        const int j = grid_.node(b, p);
        // compare against the pure finite-difference estimate of channel 0
        const int lo = p - 2;
        std::vector<double> nodes(5);
        for (int i = 0; i < 5; ++i) nodes[i] = (lo + i - p) * grid_.log_step;
        const std::vector<double> w = num::fd_weights(1, nodes);
        cplx du = 0;
        for (int i = 0; i < 5; ++i) du += w[i] * at(n, grid_.node(b, lo + i), 0);
        const cplx fd = du / grid_.lambdas[j];
        worst = std::max(worst, std::abs(fd - at(n, j, 1)) / scale);
      }
    }
  }
  return worst;
}

namespace {

constexpr double kInputFloor = 1e-14;  // declared decay level of inputs

// fhat(rho, lambda) by trapezoid over the declared window.  The step keeps
// the first alias of the e^{i lambda s} comb at least ~40 frequency units
// away, where the declared decay makes the aliased copies negligible.
cplx fhat_by_trapezoid(const BiradialInput& input, double rho, double lambda,
                       int s_nodes) {
  const double W = input.s_window;
  int half;
  if (s_nodes > 0) {
    half = std::max(1, s_nodes / 2);
  } else {
    const double h = std::min(W / 48.0, M_PI / (std::abs(lambda) + 40.0));
    half = static_cast<int>(std::ceil(W / h));
  }
  const double h = W / half;
  cplx acc = 0.5 * (std::polar(1.0, lambda * W) * input.f(rho, W) +
                    std::polar(1.0, -lambda * W) * input.f(rho, -W));
  for (int k = -half + 1; k < half; ++k) {
    const double s = k * h;
    acc += std::polar(1.0, lambda * s) * input.f(rho, s);
  }
  return acc * h;
}

}  // namespace

BiradialFunction analyze(const BiradialInput& input, const SpectralGrid& grid,
                         const AnalyzeOptions& opt) {
  if (static_cast<bool>(input.fhat) == static_cast<bool>(input.f))
    throw std::invalid_argument("analyze: provide exactly one of fhat / f");
  if (input.f && !(input.s_window > 0))
    throw std::invalid_argument("analyze: position input needs s_window > 0");

  const int d = grid.d;
  const int nq = opt.radial_nodes > 0 ? opt.radial_nodes : grid.n_max + 60;
  const auto rule = special::gauss_laguerre_scaled(nq, d - 1.0);
  // scaled rows: row_tab[i][n] = e^{-u_i} L_n^{d-1}(2 u_i)
  std::vector<std::vector<double>> row_tab(nq);
  for (int i = 0; i < nq; ++i)
    row_tab[i] = special::laguerre_row_scaled(grid.n_max, d - 1.0,
                                              2.0 * rule.nodes[i]);

  const double gamma_d = std::tgamma(static_cast<double>(d));
  BiradialFunction F(grid);
  std::vector<cplx> fh(nq);
  for (int j = 0; j < grid.size(); ++j) {
    const double lambda = grid.lambdas[j];
    const double abs_l = std::abs(lambda);
    for (int i = 0; i < nq; ++i) {
      const double rho = std::sqrt(4.0 * rule.nodes[i] / abs_l);
      fh[i] = input.fhat ? input.fhat(rho, lambda)
                         : fhat_by_trapezoid(input, rho, lambda, opt.s_nodes);
    }
    const double base = std::pow(M_PI, d) * std::exp2(2.0 * d) /
                        (gamma_d * std::pow(abs_l, d));
    for (int n = 0; n <= grid.n_max; ++n) {
      cplx acc = 0;
      for (int i = 0; i < nq; ++i) acc += rule.weights[i] * row_tab[i][n] * fh[i];
      F.at(n, j) = acc * (base / laguerre_multiplicity(d, n));
    }
  }

  const double tail = F.tail_estimate();
  if (tail > opt.tail_tol)
    throw TailError("analyze: spectral tail mass " + std::to_string(tail) +
                        " exceeds tolerance at the Laguerre truncation",
                    tail);
  return F;
}

cplx synthesize(const BiradialFunction& F, double rho, double s) {
  const SpectralGrid& g = F.grid();
  cplx acc = 0;
  for (int j = 0; j < g.size(); ++j) {
    const double lambda = g.lambdas[j];
    const double t = std::abs(lambda) * rho * rho / 2.0;
    // scaled row e^{-t/2} L_n(t) carries the mode's Gaussian factor
    const std::vector<double> row =
        special::laguerre_row_scaled(g.n_max, g.d - 1.0, t);
    cplx inner = 0;
    for (int n = 0; n <= g.n_max; ++n) inner += F.at(n, j) * row[n];
    acc += g.weights[j] * std::polar(1.0, -lambda * s) * inner;
  }
  return acc;
}

cplx synthesize(const BiradialFunction& F, const group::GroupPoint& p) {
  return synthesize(F, std::sqrt(group::z_norm_sq(p)), p.s);
}

double plancherel_norm(const BiradialFunction& F) {
  const SpectralGrid& g = F.grid();
  double acc = 0;
  for (int n = 0; n <= g.n_max; ++n) {
    const double cn = laguerre_multiplicity(g.d, n);
    double row = 0;
    for (int j = 0; j < g.size(); ++j) row += g.weights[j] * std::norm(F.at(n, j));
    acc += cn * row;
  }
  return std::sqrt(acc);
}

cplx parseval(const BiradialFunction& F, const BiradialFunction& G) {
  if (!F.same_grid(G)) throw std::invalid_argument("parseval: grid mismatch");
  const SpectralGrid& g = F.grid();
  cplx acc = 0;
  for (int n = 0; n <= g.n_max; ++n) {
    const double cn = laguerre_multiplicity(g.d, n);
    cplx row = 0;
    for (int j = 0; j < g.size(); ++j)
      row += g.weights[j] * std::conj(F.at(n, j)) * G.at(n, j);
    acc += cn * row;
  }
  return acc;
}

namespace {

double edge_row_magnitude(const BiradialFunction& F, int ladder_pos) {
  double m = 0;
  for (int n = 0; n < F.rows(); ++n)
    for (int b = 0; b < 2; ++b)
      m = std::max(m, std::abs(F.at(n, F.grid().node(b, ladder_pos))));
  return m;
}

}  // namespace

BiradialFunction dilate_spectral(const BiradialFunction& F, double t,
                                 const DilateOptions& opt) {
  if (t == 0) throw std::invalid_argument("dilate_spectral: t must be nonzero");
  const SpectralGrid& g = F.grid();
  const int P = g.per_sign;
  BiradialFunction out(g, F.jet_order(), F.buffer_rows());

  // ladder displacement of the sample point: |t^2 lambda| = |lambda| 2^{x/q}
  const double x = 2.0 * g.q * std::log2(std::abs(t));
  int shift = 0;
  const bool exact = g.dilation_shift(t, &shift);

  // zero-extension past an edge is only sound if that edge row is already
  // negligible; otherwise real mass would be dropped silently
  const bool spills_high = exact ? (shift > 0) : (x > 0);
  const bool spills_low = exact ? (shift < 0) : (x < 0);
  if (spills_high) {
    const double edge = edge_row_magnitude(F, P - 1);
    if (edge > opt.edge_tol)
      throw std::domain_error(
          "dilate_spectral: scaled lambda exceeds the grid and the top edge "
          "row is not negligible");
  }
  if (spills_low) {
    const double edge = edge_row_magnitude(F, 0);
    if (edge > opt.edge_tol)
      throw std::domain_error(
          "dilate_spectral: scaled lambda falls below the grid and the bottom "
          "edge row is not negligible");
  }

  std::vector<double> chan_scale(F.jet_order() + 1);
  for (int c = 0; c <= F.jet_order(); ++c) chan_scale[c] = std::pow(t * t, c);

  for (int b = 0; b < 2; ++b) {
    for (int p = 0; p < P; ++p) {
      const int j = g.node(b, p);
      if (exact) {
        const int src = p + shift;
        const bool in = src >= 0 && src < P;
        for (int c = 0; c <= F.jet_order(); ++c)
          for (int n = 0; n < F.rows(); ++n)
            out.at(n, j, c) =
                in ? F.at(n, g.node(b, src), c) * chan_scale[c] : cplx(0);
        continue;
      }
      const double pos = p + x;
      if (pos < 0 || pos > P - 1) {
        for (int c = 0; c <= F.jet_order(); ++c)
          for (int n = 0; n < F.rows(); ++n) out.at(n, j, c) = 0;
        continue;
      }
      // cubic Lagrange interpolation in the log-spaced ladder coordinate
      const int base = std::clamp(static_cast<int>(std::floor(pos)) - 1, 0,
                                  std::max(0, P - 4));
      const int m = std::min(4, P);
      std::vector<double> lw(m, 1.0);
      for (int a = 0; a < m; ++a)
        for (int bb = 0; bb < m; ++bb)
          if (bb != a)
            lw[a] *= (pos - (base + bb)) / static_cast<double>(a - bb);
      for (int c = 0; c <= F.jet_order(); ++c) {
        for (int n = 0; n < F.rows(); ++n) {
          cplx v = 0;
          for (int a = 0; a < m; ++a)
            v += lw[a] * F.at(n, g.node(b, base + a), c);
          out.at(n, j, c) = v * chan_scale[c];
        }
      }
    }
  }
  return out;
}

BiradialFunction mult_by_Z(const BiradialFunction& F, const ZOptions& opt) {
  const SpectralGrid& g = F.grid();
  const int in_rows = F.rows();
  int out_buffer = F.buffer_rows();
  if (out_buffer > 0) {
    --out_buffer;
  } else {
    const double tail = F.tail_estimate();
    if (tail > opt.tail_tol)
      throw TailError(
          "mult_by_Z: no buffer row and tail mass " + std::to_string(tail) +
              " above tolerance; the lambda<0 difference would be biased",
          tail);
  }
  const int out_jet = std::max(0, F.jet_order() - 1);
  BiradialFunction out(g, out_jet, out_buffer);

  // i! and binomials for the Leibniz expansion of d^c [ (1/lambda) diff ]
  auto leibniz_coef = [](int c, int i) {
    double v = 1.0;
    for (int a = 0; a < i; ++a) v *= static_cast<double>(c - a);  // c!/(c-i)!
    return v;  // binom(c,i) * i! = c!/(c-i)!
  };

  for (int j = 0; j < g.size(); ++j) {
    const double lambda = g.lambdas[j];
    for (int n = 0; n < out.rows(); ++n) {
      for (int c = 0; c <= out_jet; ++c) {
        cplx deriv = (c + 1 <= F.jet_order()) ? F.at(n, j, c + 1)
                                              : F.lambda_derivative(n, j, c);
        cplx diff = 0;
        if (lambda > 0) {
          if (n >= 1) {
            for (int i = 0; i <= c; ++i) {
              const double pw = leibniz_coef(c, i) *
                                ((i % 2 == 0) ? 1.0 : -1.0) /
                                std::pow(lambda, i + 1);
              diff += pw * (F.at(n, j, c - i) - F.at(n - 1, j, c - i));
            }
            diff *= static_cast<double>(n);
          }
        } else {
          for (int i = 0; i <= c; ++i) {
            const double pw = leibniz_coef(c, i) * ((i % 2 == 0) ? 1.0 : -1.0) /
                              std::pow(lambda, i + 1);
            const cplx up = (n + 1 < in_rows) ? F.at(n + 1, j, c - i) : cplx(0);
            diff += pw * (up - F.at(n, j, c - i));
          }
          diff *= static_cast<double>(g.d + n);
        }
        out.at(n, j, c) = deriv - diff;
      }
    }
  }
  return out;
}

double moment_norm(const BiradialFunction& F, int m, const ZOptions& opt) {
  if (m < 0) throw std::invalid_argument("moment_norm: m < 0");
  if (m == 0) return plancherel_norm(F);
  BiradialFunction Z = mult_by_Z(F, opt);
  for (int k = 1; k < m; ++k) Z = mult_by_Z(Z, opt);
  return plancherel_norm(Z);
}

void dump_csv(const BiradialFunction& F, std::ostream& os) {
  os << "n,lambda,re,im,re_dlambda,im_dlambda\n";
  char line[192];
  const SpectralGrid& g = F.grid();
  for (int n = 0; n <= g.n_max; ++n) {
    for (int j = 0; j < g.size(); ++j) {
      const cplx v = F.at(n, j);
      const cplx dv = F.lambda_derivative(n, j);
      std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", n,
                    g.lambdas[j], v.real(), v.imag(), dv.real(), dv.imag());
      os << line;
    }
  }
}

}  // namespace heisen::biradial
