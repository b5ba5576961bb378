#pragma once
// Heisenberg group H^d: points, group law, dilations, homogeneous norm,
// left-invariant vector fields and the group Taylor machinery.
//
// Conventions: v = (z, s) with z = (x, y) in R^d x R^d.  The group law is
//   (z, s) * (z', s') = (z + z', s + s' + (y.x' - x.y')/2),
// dilations are delta_t(z, s) = (t z, t^2 s), and the homogeneous norm is
// (|z|^4 + s^2)^(1/4).  Letters for the field word D^I: 1..d -> X_i,
// d+1..2d -> Y_i, 2d+1 -> S, with homogeneous weights 1, 1, 2.

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace heisen::group {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 4;  // supported range of d

struct GroupPoint {
  int d = 1;
  std::array<double, kMaxDim> x{};
  std::array<double, kMaxDim> y{};
  double s = 0;

  static GroupPoint zero(int d) {
    GroupPoint p;
    p.d = d;
    return p;
  }
};

// Convenience constructor for d=1.
GroupPoint point1(double x, double y, double s);

GroupPoint group_mul(const GroupPoint& a, const GroupPoint& b);
GroupPoint group_inverse(const GroupPoint& a);
GroupPoint dilate(double t, const GroupPoint& a);
double z_norm_sq(const GroupPoint& a);           // |z|^2
double homogeneous_norm(const GroupPoint& a);    // (|z|^4 + s^2)^(1/4)
int homogeneous_dimension(int d);                // Q = 2d + 2

// A word over the generator letters; weight(I) = sum of letter weights.
struct MultiIndex {
  std::vector<int> letters;  // values in 1..2d+1
  int weight(int d) const;
};

// A scalar field on H^d.  `value` is required; the first-order partials are
// optional and, when present, are used instead of finite differences for the
// innermost derivative (they make iterated field applications much more
// accurate).  `scale` sets the finite-difference step scale.
struct SmoothField {
  int d = 1;
  std::function<cplx(const GroupPoint&)> value;
  std::vector<std::function<cplx(const GroupPoint&)>> dx;  // d entries or empty
  std::vector<std::function<cplx(const GroupPoint&)>> dy;
  std::function<cplx(const GroupPoint&)> ds;
  double scale = 1.0;

  bool has_partials() const { return static_cast<int>(dx.size()) == d && ds != nullptr; }
};

// Left-invariant field D_i applied at p:
//   X_i = d/dx_i + (y_i/2) d/ds,   Y_i = d/dy_i - (x_i/2) d/ds,   S = d/ds.
// Euclidean partials come from analytic callables when available, else from
// 4th-order central differences with step eps^(1/5)*scale.
cplx apply_field(const SmoothField& f, int letter, const GroupPoint& p);

// D^I f(p) = D_{i1}(D_{i2}(... f)) applied left-to-right as written.
cplx apply_word(const MultiIndex& I, const SmoothField& f, const GroupPoint& p);

// Group Taylor term M_v^n f(w) = d^n/dt^n f(w * delta_t v) |_{t=0}.
// Symmetric stencils wide enough to be exact on polynomial paths of degree
// <= n+1 and 6th-order accurate otherwise; v is internally normalized to unit
// homogeneous norm (using M_{delta_t v}^n = t^n M_v^n) so the step is always
// relative to a unit-scale direction.  `step` <= 0 picks the default.
cplx taylor_term(const GroupPoint& v, int n, const SmoothField& f,
                 const GroupPoint& w, double step = 0.0);

// f(w * v) - sum_{j<=n} M_v^j f(w) / j!.
cplx taylor_remainder(const GroupPoint& v, int n, const SmoothField& f,
                      const GroupPoint& w, double step = 0.0);

// Field combinator: g = f o delta_t with chain-rule partials when present.
SmoothField dilate_field(const SmoothField& f, double t);

}  // namespace heisen::group
