#include "heisen/group.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "heisen/numutil.hpp"

namespace heisen::group {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_dim(int d) {
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("dimension d out of range");
}
}  // namespace

GroupPoint point1(double x, double y, double s) {
  GroupPoint p;
  p.d = 1;
  p.x[0] = x;
  p.y[0] = y;
  p.s = s;
  return p;
}

GroupPoint group_mul(const GroupPoint& a, const GroupPoint& b) {
  if (a.d != b.d) throw std::invalid_argument("group_mul: dimension mismatch");
  GroupPoint r = GroupPoint::zero(a.d);
  double twist = 0;
  for (int i = 0; i < a.d; ++i) {
    r.x[i] = a.x[i] + b.x[i];
    r.y[i] = a.y[i] + b.y[i];
    twist += a.y[i] * b.x[i] - a.x[i] * b.y[i];
  }
  r.s = a.s + b.s + 0.5 * twist;
  return r;
}

GroupPoint group_inverse(const GroupPoint& a) {
  GroupPoint r = GroupPoint::zero(a.d);
  for (int i = 0; i < a.d; ++i) {
    r.x[i] = -a.x[i];
    r.y[i] = -a.y[i];
  }
  r.s = -a.s;
  return r;
}

GroupPoint dilate(double t, const GroupPoint& a) {
  GroupPoint r = GroupPoint::zero(a.d);
  for (int i = 0; i < a.d; ++i) {
    r.x[i] = t * a.x[i];
    r.y[i] = t * a.y[i];
  }
  r.s = t * t * a.s;
  return r;
}

double z_norm_sq(const GroupPoint& a) {
  double n = 0;
  for (int i = 0; i < a.d; ++i) n += a.x[i] * a.x[i] + a.y[i] * a.y[i];
  return n;
}

double homogeneous_norm(const GroupPoint& a) {
  const double z2 = z_norm_sq(a);
  return std::pow(z2 * z2 + a.s * a.s, 0.25);
}

int homogeneous_dimension(int d) {
  check_dim(d);
  return 2 * d + 2;
}

int MultiIndex::weight(int d) const {
  int w = 0;
  for (int l : letters) {
    if (l < 1 || l > 2 * d + 1) throw std::invalid_argument("MultiIndex: letter out of range");
    w += (l == 2 * d + 1) ? 2 : 1;
  }
  return w;
}

namespace {

enum class Axis { X, Y, S };

// Euclidean partial along one axis, analytic if available else 4th-order
// central differences.
cplx euclid_partial(const SmoothField& f, Axis ax, int i, const GroupPoint& p) {
  if (f.has_partials()) {
    switch (ax) {
      case Axis::X: return f.dx[i](p);
      case Axis::Y: return f.dy[i](p);
      case Axis::S: return f.ds(p);
    }
  }
  const double h = std::pow(kEps, 0.2) * f.scale;
  auto shifted = [&](double delta) {
    GroupPoint q = p;
    switch (ax) {
      case Axis::X: q.x[i] += delta; break;
      case Axis::Y: q.y[i] += delta; break;
      case Axis::S: q.s += delta; break;
    }
    return f.value(q);
  };
  return (-shifted(2 * h) + 8.0 * shifted(h) - 8.0 * shifted(-h) + shifted(-2 * h)) /
         (12.0 * h);
}

}  // namespace

cplx apply_field(const SmoothField& f, int letter, const GroupPoint& p) {
  const int d = f.d;
  check_dim(d);
  if (letter < 1 || letter > 2 * d + 1)
    throw std::invalid_argument("apply_field: letter out of range");
  if (letter == 2 * d + 1) return euclid_partial(f, Axis::S, 0, p);
  if (letter <= d) {
    const int i = letter - 1;
    return euclid_partial(f, Axis::X, i, p) +
           0.5 * p.y[i] * euclid_partial(f, Axis::S, 0, p);
  }
  const int i = letter - d - 1;
  return euclid_partial(f, Axis::Y, i, p) -
         0.5 * p.x[i] * euclid_partial(f, Axis::S, 0, p);
}

cplx apply_word(const MultiIndex& I, const SmoothField& f, const GroupPoint& p) {
  if (I.letters.empty()) return f.value(p);
  if (I.letters.size() == 1) return apply_field(f, I.letters[0], p);
  MultiIndex tail;
  tail.letters.assign(I.letters.begin() + 1, I.letters.end());
  SmoothField g;
  g.d = f.d;
  g.scale = f.scale;
  g.value = [tail, &f](const GroupPoint& q) { return apply_word(tail, f, q); };
  return apply_field(g, I.letters[0], p);
}

namespace {

// Path derivative d^n/dt^n g(t)|_0 on a symmetric stencil; `half` chosen so
// the rule is exact on polynomials of degree <= 2*half and ~6th order on
// smooth paths.
cplx path_derivative(const std::function<cplx(double)>& g, int n, double h) {
  if (n == 0) return g(0.0);
  const int half = (n + 6) / 2;  // 2*half+1 points, 2*half - n >= 5
  auto nodes = num::symmetric_stencil_nodes(half, h);
  auto w = num::fd_weights(n, nodes);
  cplx acc = 0;
  for (size_t j = 0; j < nodes.size(); ++j)
    if (w[j] != 0.0) acc += w[j] * g(nodes[j]);
  return acc;
}

constexpr double kDefaultTaylorStep = 0.02;

}  // namespace

cplx taylor_term(const GroupPoint& v, int n, const SmoothField& f,
                 const GroupPoint& w, double step) {
  if (n < 0) throw std::invalid_argument("taylor_term: n must be >= 0");
  if (n == 0) return f.value(w);
  const double t0 = homogeneous_norm(v);
  if (t0 == 0.0) return 0.0;  // delta_t(0) = 0: the path is constant
  const GroupPoint vn = dilate(1.0 / t0, v);
  const double h = (step > 0) ? step : kDefaultTaylorStep;
  auto g = [&](double t) { return f.value(group_mul(w, dilate(t, vn))); };
  cplx m = path_derivative(g, n, h);
  return std::pow(t0, n) * m;
}

cplx taylor_remainder(const GroupPoint& v, int n, const SmoothField& f,
                      const GroupPoint& w, double step) {
  cplx taylor_sum = 0;
  double fact = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) fact *= j;
    taylor_sum += taylor_term(v, j, f, w, step) / fact;
  }
  return f.value(group_mul(w, v)) - taylor_sum;
}

SmoothField dilate_field(const SmoothField& f, double t) {
  SmoothField g;
  g.d = f.d;
  g.scale = f.scale / std::abs(t);
  auto base = f.value;
  g.value = [base, t](const GroupPoint& p) { return base(dilate(t, p)); };
  if (f.has_partials()) {
    g.dx.resize(f.d);
    g.dy.resize(f.d);
    for (int i = 0; i < f.d; ++i) {
      auto fx = f.dx[i];
      auto fy = f.dy[i];
      g.dx[i] = [fx, t](const GroupPoint& p) { return t * fx(dilate(t, p)); };
      g.dy[i] = [fy, t](const GroupPoint& p) { return t * fy(dilate(t, p)); };
    }
    auto fs = f.ds;
    g.ds = [fs, t](const GroupPoint& p) { return t * t * fs(dilate(t, p)); };
  }
  return g;
}

}  // namespace heisen::group
