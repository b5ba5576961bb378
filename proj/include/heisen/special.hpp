#pragma once
// Laguerre and Hermite evaluators, Gauss quadrature rules (Golub-Welsch on a
// symmetric tridiagonal matrix, solved in-repo), and Schrodinger
// representation matrix elements on H^d.

#include <complex>
#include <vector>

#include "heisen/group.hpp"

namespace heisen::special {

using cplx = std::complex<double>;

// ---------------------------------------------------------------- Laguerre

// Generalized Laguerre L_n^alpha(t) by the upward three-term recurrence
//   (n+1) L_{n+1} = (2n+1+alpha-t) L_n - (n+alpha) L_{n-1}.
// Stable for t in the oscillatory range; a log-domain magnitude guard rejects
// parameter ranges whose values would overflow instead of returning garbage.
double laguerre(int n, double alpha, double t);

// Values L_0..L_nmax at fixed t (single recurrence sweep).
std::vector<double> laguerre_row(int n_max, double alpha, double t);

// Exponentially scaled row e^{-t/2} L_n^alpha(t), n = 0..n_max.  The scaled
// values stay bounded for every (n, t), so this is the form all large-grid
// sums use; the recurrence is identical because scaling commutes with it.
std::vector<double> laguerre_row_scaled(int n_max, double alpha, double t);

// ----------------------------------------------------------------- Hermite

// 1-D orthonormal oscillator eigenfunctions eta_m: (q^2 - d^2/dq^2) eta_m =
// (1 + 2m) eta_m, ||eta_m||_{L^2(R)} = 1, eta_0(q) = pi^{-1/4} e^{-q^2/2}.
double hermite_eta(int m, double q);
std::vector<double> hermite_eta_row(int m_max, double q);

// Stretched d-dim product eigenfunction eta_m^lambda(q) =
// |lambda|^{d/4} prod_i eta_{m_i}(|lambda|^{1/2} q_i).
double scaled_hermite(const std::vector<int>& m, double lambda,
                      const std::vector<double>& q);

// -------------------------------------------------------------- quadrature

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Weight t^alpha e^{-t} on (0, inf); weights sum to Gamma(alpha+1).
QuadratureRule gauss_laguerre(int n, double alpha);
// Same nodes with weights w_i e^{u_i}: the plain weights underflow past a few
// hundred nodes, while these stay O(1).  Pair with laguerre_row_scaled, whose
// e^{-t/2} factor re-supplies the suppressed exponential.
QuadratureRule gauss_laguerre_scaled(int n, double alpha);
// Weight e^{-t^2} on R; weights sum to sqrt(pi).
QuadratureRule gauss_hermite(int n);
// Weight 1 on [-1, 1].
QuadratureRule gauss_legendre(int n);

// Eigenvalues (returned in `diag`, ascending) and first components of the
// normalized eigenvectors of the symmetric tridiagonal matrix with the given
// diagonal and subdiagonal (implicit-shift QL).
void tridiag_eigen(std::vector<double>& diag, std::vector<double>& sub,
                   std::vector<double>& first_row);

// --------------------------------------------- representation coefficients

// <eta_m^lambda, U_v^lambda eta_mp^lambda> with
//   U_v^lambda a(q) = e^{i lambda (s + x.q + x.y/2)} a(q + y),
// inner product conjugate-linear in the first slot.  Supported for
// d = v.d = m.size() = mp.size() in 1..2.  The integral factorizes per
// coordinate and is evaluated by a trapezoid rule on the Gaussian envelope.
cplx rep_matrix_element(const group::GroupPoint& v, double lambda,
                        const std::vector<int>& m, const std::vector<int>& mp);

}  // namespace heisen::special
