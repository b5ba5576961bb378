#include "heisen/special.hpp"

#include <cmath>
#include <stdexcept>

namespace heisen::special {

namespace {

// Crude magnitude bound log |L_n^alpha(t)| <= log C(n+alpha, n) + t/2 for
// t >= 0, alpha >= 0 (classical).  Used only to refuse overflowing ranges.
double laguerre_log_bound(int n, double alpha, double t) {
  return std::lgamma(n + alpha + 1) - std::lgamma(n + 1.0) - std::lgamma(alpha + 1) +
         0.5 * std::max(t, 0.0);
}

constexpr double kOverflowGuard = 1e290;

}  // namespace

std::vector<double> laguerre_row(int n_max, double alpha, double t) {
  if (n_max < 0) throw std::invalid_argument("laguerre_row: n_max < 0");
  if (alpha <= -1) throw std::invalid_argument("laguerre_row: alpha <= -1");
  if (t < 0) throw std::invalid_argument("laguerre_row: t < 0");
  if (laguerre_log_bound(n_max, alpha, t) > 667.0)
    throw std::overflow_error("laguerre_row: values exceed double range");
  std::vector<double> L(n_max + 1);
  L[0] = 1.0;
  if (n_max >= 1) L[1] = 1.0 + alpha - t;
  for (int n = 1; n < n_max; ++n) {
    L[n + 1] = ((2 * n + 1 + alpha - t) * L[n] - (n + alpha) * L[n - 1]) / (n + 1);
    if (std::abs(L[n + 1]) > kOverflowGuard)
      throw std::overflow_error("laguerre_row: recurrence overflow");
  }
  return L;
}

double laguerre(int n, double alpha, double t) {
  return laguerre_row(n, alpha, t)[n];
}

std::vector<double> laguerre_row_scaled(int n_max, double alpha, double t) {
  if (n_max < 0) throw std::invalid_argument("laguerre_row_scaled: n_max < 0");
  if (alpha <= -1) throw std::invalid_argument("laguerre_row_scaled: alpha <= -1");
  if (t < 0) throw std::invalid_argument("laguerre_row_scaled: t < 0");
  // The raw recurrence values L_n(t) can dwarf the double range long before
  // the scaled targets e^{-t/2} L_n(t) do (those are polynomially bounded),
  // and e^{-t/2} alone underflows past t ~ 1400 while mid-row scaled values
  // are still O(1).  So run the recurrence on u_n = L_n(t) 2^{-shift} with a
  // drifting binary shift and fold e^{-t/2} = r 2^{-k} back in per entry.
  std::vector<double> out(n_max + 1);
  const double t_log2 = 0.5 * t / M_LN2;
  const int k = static_cast<int>(std::floor(t_log2));
  const double r = std::exp2(-(t_log2 - k));
  long shift = 0;
  double u0 = 1.0;
  double u1 = 1.0 + alpha - t;
  out[0] = std::ldexp(u0 * r, static_cast<int>(shift) - k);
  if (n_max >= 1) out[1] = std::ldexp(u1 * r, static_cast<int>(shift) - k);
  for (int n = 1; n < n_max; ++n) {
    double u2 = ((2 * n + 1 + alpha - t) * u1 - (n + alpha) * u0) / (n + 1);
    const double m = std::max(std::abs(u1), std::abs(u2));
    if (m > 1e250) {
      u1 *= 0x1p-500;
      u2 *= 0x1p-500;
      shift += 500;
    } else if (m != 0.0 && m < 1e-250) {
      u1 *= 0x1p500;
      u2 *= 0x1p500;
      shift -= 500;
    }
    out[n + 1] = std::ldexp(u2 * r, static_cast<int>(shift) - k);
    u0 = u1;
    u1 = u2;
  }
  return out;
}

std::vector<double> hermite_eta_row(int m_max, double q) {
  if (m_max < 0) throw std::invalid_argument("hermite_eta_row: m_max < 0");
  std::vector<double> h(m_max + 1);
  h[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * q * q);
  if (m_max >= 1) h[1] = std::sqrt(2.0) * q * h[0];
  for (int m = 1; m < m_max; ++m)
    h[m + 1] = q * std::sqrt(2.0 / (m + 1)) * h[m] - std::sqrt(m / (m + 1.0)) * h[m - 1];
  return h;
}

double hermite_eta(int m, double q) { return hermite_eta_row(m, q)[m]; }

double scaled_hermite(const std::vector<int>& m, double lambda,
                      const std::vector<double>& q) {
  if (m.size() != q.size())
    throw std::invalid_argument("scaled_hermite: index/point size mismatch");
  if (lambda == 0) throw std::invalid_argument("scaled_hermite: lambda must be nonzero");
  const double r = std::sqrt(std::abs(lambda));
  double v = std::pow(std::abs(lambda), m.size() / 4.0);
  for (size_t i = 0; i < m.size(); ++i) v *= hermite_eta(m[i], r * q[i]);
  return v;
}

// Implicit-shift QL for a symmetric tridiagonal matrix, accumulating only the
// first row of the eigenvector matrix (all that Golub-Welsch needs).
void tridiag_eigen(std::vector<double>& d, std::vector<double>& e,
                   std::vector<double>& first_row) {
  const int n = static_cast<int>(d.size());
  if (static_cast<int>(e.size()) < n - 1)
    throw std::invalid_argument("tridiag_eigen: subdiagonal too short");
  first_row.assign(n, 0.0);
  if (n == 0) return;
  first_row[0] = 1.0;
  if (n == 1) return;

  std::vector<double> sub(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) sub[i] = e[i];
  const double eps = 2.22e-16;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(sub[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 50) throw std::runtime_error("tridiag_eigen: no convergence");
      double g = (d[l + 1] - d[l]) / (2.0 * sub[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + sub[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * sub[i];
        const double b = c * sub[i];
        r = std::hypot(f, g);
        sub[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          sub[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        // rotate the tracked first-row components
        f = first_row[i + 1];
        first_row[i + 1] = s * first_row[i] + c * f;
        first_row[i] = c * first_row[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      sub[l] = g;
      sub[m] = 0.0;
    }
  }
  // Sort ascending, carrying the first-row components along.
  for (int i = 0; i < n - 1; ++i) {
    int k = i;
    for (int j = i + 1; j < n; ++j)
      if (d[j] < d[k]) k = j;
    if (k != i) {
      std::swap(d[i], d[k]);
      std::swap(first_row[i], first_row[k]);
    }
  }
  e.assign(n - 1, 0.0);
}

namespace {

QuadratureRule golub_welsch(std::vector<double> diag, std::vector<double> sub,
                            double weight_integral) {
  std::vector<double> fr;
  tridiag_eigen(diag, sub, fr);
  QuadratureRule q;
  q.nodes = std::move(diag);
  q.weights.resize(q.nodes.size());
  for (size_t i = 0; i < q.weights.size(); ++i)
    q.weights[i] = weight_integral * fr[i] * fr[i];
  return q;
}

}  // namespace

QuadratureRule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n < 1");
  if (alpha <= -1) throw std::invalid_argument("gauss_laguerre: alpha <= -1");
  std::vector<double> diag(n), sub(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) sub[i - 1] = std::sqrt(i * (i + alpha));
  return golub_welsch(std::move(diag), std::move(sub), std::tgamma(alpha + 1.0));
}

QuadratureRule gauss_laguerre_scaled(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre_scaled: n < 1");
  if (alpha <= -1) throw std::invalid_argument("gauss_laguerre_scaled: alpha <= -1");
  std::vector<double> diag(n), sub(n > 1 ? n - 1 : 0), fr;
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) sub[i - 1] = std::sqrt(i * (i + alpha));
  tridiag_eigen(diag, sub, fr);
  // w_i e^{u_i} = Gamma(n+alpha+1) u_i / (n! (n+1)^2 [e^{-u_i/2} L_{n+1}(u_i)]^2):
  // every factor is representable, unlike w_i itself.
  QuadratureRule q;
  q.nodes = std::move(diag);
  q.weights.resize(n);
  const double logc = std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0) -
                      2.0 * std::log(n + 1.0);
  for (int i = 0; i < n; ++i) {
    const double m = laguerre_row_scaled(n + 1, alpha, q.nodes[i]).back();
    q.weights[i] = std::exp(logc) * q.nodes[i] / (m * m);
  }
  return q;
}

QuadratureRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n < 1");
  std::vector<double> diag(n, 0.0), sub(n > 1 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) sub[i - 1] = std::sqrt(0.5 * i);
  return golub_welsch(std::move(diag), std::move(sub), std::sqrt(M_PI));
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  std::vector<double> diag(n, 0.0), sub(n > 1 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) {
    const double k = i;
    sub[i - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  }
  return golub_welsch(std::move(diag), std::move(sub), 2.0);
}

namespace {

// 1-D core integral J = int eta_m(u) e^{i theta u} eta_mp(u + c) du by a
// trapezoid rule over the Gaussian-decaying integrand.
cplx hermite_overlap(int m, int mp, double theta, double c) {
  const int mm = std::max(m, mp);
  // support radius: classical turning point + margin, covering the shift
  const double R = 0.5 * std::abs(c) + std::sqrt(2.0 * mm + 1.0) + 9.0;
  const double bandwidth = std::abs(theta) + std::sqrt(2.0 * mm + 1.0) + 1.0;
  const double h = std::min(0.08, M_PI / (8.0 * bandwidth));
  const int half = static_cast<int>(std::ceil(R / h));
  cplx acc = 0;
  for (int k = -half; k <= half; ++k) {
    const double u = k * h;
    const double a = hermite_eta(m, u);
    if (a == 0.0) continue;
    const double b = hermite_eta(mp, u + c);
    acc += a * b * std::polar(1.0, theta * u);
  }
  return acc * h;
}

}  // namespace

cplx rep_matrix_element(const group::GroupPoint& v, double lambda,
                        const std::vector<int>& m, const std::vector<int>& mp) {
  const int d = v.d;
  if (d < 1 || d > 2)
    throw std::invalid_argument("rep_matrix_element: d must be 1 or 2");
  if (static_cast<int>(m.size()) != d || static_cast<int>(mp.size()) != d)
    throw std::invalid_argument("rep_matrix_element: index size mismatch");
  if (lambda == 0)
    throw std::invalid_argument("rep_matrix_element: lambda must be nonzero");
  const double r = std::sqrt(std::abs(lambda));
  double xy = 0;
  for (int i = 0; i < d; ++i) xy += v.x[i] * v.y[i];
  cplx result = std::polar(1.0, lambda * (v.s + 0.5 * xy));
  // After u = |lambda|^{1/2} q the stretch factors cancel and each coordinate
  // contributes int eta_{m_i}(u) e^{i sgn(lambda) r x_i u} eta_{mp_i}(u + r y_i) du.
  const double sgn = (lambda > 0) ? 1.0 : -1.0;
  for (int i = 0; i < d; ++i)
    result *= hermite_overlap(m[i], mp[i], sgn * r * v.x[i], r * v.y[i]);
  return result;
}

}  // namespace heisen::special
