#include "heisen/multipliers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace heisen::mult {

using num::Jet;

namespace {

int resolve_jet_order(const MultiplierSpec& phi, const KernelOptions& opt) {
  const int avail = std::min(phi.max_derivative(), num::kJetOrder);
  if (opt.jet_order < 0) return avail;
  if (opt.jet_order > avail)
    throw std::invalid_argument(
        "kernel_coeffs: requested more derivative channels than the symbol "
        "provides");
  return opt.jet_order;
}

cplx symbol_derivative(const MultiplierSpec& phi, int k, double sigma) {
  if (k == 0) return phi.symbol(sigma);
  if (phi.jet) return phi.jet(sigma).derivative(k);
  return phi.derivatives.at(k - 1)(sigma);
}

}  // namespace

BiradialFunction kernel_coeffs(const MultiplierSpec& phi,
                               const SpectralGrid& grid,
                               const KernelOptions& opt) {
  const int jets = resolve_jet_order(phi, opt);
  BiradialFunction F(grid, jets, opt.buffer_rows);
  for (int n = 0; n < F.rows(); ++n) {
    const double freq = grid.d + 2.0 * n;
    for (int j = 0; j < grid.size(); ++j) {
      const double lambda = grid.lambdas[j];
      const double sigma = std::abs(lambda) * freq;
      const double chain = (lambda > 0 ? 1.0 : -1.0) * freq;
      if (phi.jet && jets > 0) {
        const Jet v = phi.jet(sigma);
        double cp = 1.0;
        for (int c = 0; c <= jets; ++c) {
          F.at(n, j, c) = cp * v.derivative(c);
          cp *= chain;
        }
      } else {
        double cp = 1.0;
        for (int c = 0; c <= jets; ++c) {
          F.at(n, j, c) = cp * symbol_derivative(phi, c, sigma);
          cp *= chain;
        }
      }
      if (!std::isfinite(std::abs(F.at(n, j))))
        throw std::runtime_error("kernel_coeffs: symbol value not finite at sigma=" +
                                 std::to_string(sigma));
    }
  }
  if (std::isfinite(opt.tail_tol)) {
    const double tail = F.tail_estimate();
    if (tail > opt.tail_tol)
      throw biradial::TailError(
          "kernel_coeffs: tail mass " + std::to_string(tail) +
              " at the Laguerre truncation exceeds tolerance",
          tail);
  }
  return F;
}

BiradialFunction apply(const MultiplierSpec& phi, const BiradialFunction& F) {
  const SpectralGrid& grid = F.grid();
  const int jets = std::min(F.jet_order(), phi.max_derivative());
  BiradialFunction out(grid, jets, F.buffer_rows());
  std::vector<cplx> sym(jets + 1);
  for (int n = 0; n < F.rows(); ++n) {
    const double freq = grid.d + 2.0 * n;
    for (int j = 0; j < grid.size(); ++j) {
      const double lambda = grid.lambdas[j];
      const double sigma = std::abs(lambda) * freq;
      const double chain = (lambda > 0 ? 1.0 : -1.0) * freq;
      // sym[k] = d^k/dlambda^k of phi(|lambda|(d+2n))
      if (phi.jet && jets > 0) {
        const Jet v = phi.jet(sigma);
        double cp = 1.0;
        for (int k = 0; k <= jets; ++k) {
          sym[k] = cp * v.derivative(k);
          cp *= chain;
        }
      } else {
        double cp = 1.0;
        for (int k = 0; k <= jets; ++k) {
          sym[k] = cp * symbol_derivative(phi, k, sigma);
          cp *= chain;
        }
      }
      for (int c = 0; c <= jets; ++c) {
        cplx acc = 0;
        for (int i = 0; i <= c; ++i)
          acc += num::binomial(c, i) * F.at(n, j, i) * sym[c - i];
        out.at(n, j, c) = acc;
      }
    }
  }
  return out;
}

BiradialFunction apply_joint(const JointMultiplierSpec& Phi,
                             const BiradialFunction& F) {
  const SpectralGrid& grid = F.grid();
  BiradialFunction out(grid, 0, F.buffer_rows());
  for (int n = 0; n < F.rows(); ++n) {
    const double freq = grid.d + 2.0 * n;
    for (int j = 0; j < grid.size(); ++j) {
      const double lambda = grid.lambdas[j];
      // S transforms to multiplication by -i lambda on the G side
      out.at(n, j) = F.at(n, j) *
                     Phi.symbol(std::abs(lambda) * freq, cplx(0.0, -lambda));
    }
  }
  return out;
}

cplx kernel_at(const MultiplierSpec& phi, const SpectralGrid& grid,
               const group::GroupPoint& p, const KernelOptions& opt) {
  KernelOptions local = opt;
  local.jet_order = 0;  // pointwise synthesis needs no derivative channels
  return biradial::synthesize(kernel_coeffs(phi, grid, local), p);
}

KernelNormResult l2_kernel_norm(const MultiplierSpec& phi,
                                const SpectralGrid& grid) {
  KernelOptions opt;
  opt.jet_order = 0;
  opt.tail_tol = std::numeric_limits<double>::infinity();
  const BiradialFunction F = kernel_coeffs(phi, grid, opt);

  std::vector<double> mass(grid.n_max + 1, 0.0);
  double total = 0;
  for (int n = 0; n <= grid.n_max; ++n) {
    double row = 0;
    for (int j = 0; j < grid.size(); ++j)
      row += grid.weights[j] * std::norm(F.at(n, j));
    mass[n] = biradial::laguerre_multiplicity(grid.d, n) * row;
    total += mass[n];
  }

  KernelNormResult res;
  res.admissible = phi.mu > (grid.d + 1) / 2.0;  // Q/4 with Q = 2d+2
  res.tail_fraction = total > 0 ? mass[grid.n_max] / total : 0.0;

  // A finite grid sum is always finite; detect divergence of the underlying
  // series from the decay rate of the top row masses.
  const int lo = std::max(1, (3 * grid.n_max) / 4);
  std::vector<double> xs, ys;
  for (int n = lo; n <= grid.n_max; ++n) {
    if (mass[n] <= 0) continue;
    xs.push_back(n);
    ys.push_back(mass[n]);
  }
  if (xs.size() >= 4) {
    const num::LineFit fit = num::fit_loglog(xs, ys);
    if (fit.slope >= -1.0) {
      res.value = std::numeric_limits<double>::infinity();
      res.divergence_exponent = fit.slope;
      return res;
    }
  }
  res.value = std::sqrt(total);
  return res;
}

MomentGrowth moment_growth_probe(
    const std::function<MultiplierSpec(double)>& family, int m,
    const std::vector<double>& t_list, const SpectralGrid& grid,
    const KernelOptions& opt) {
  if (m < 0) throw std::invalid_argument("moment_growth_probe: m < 0");
  MomentGrowth out;
  for (double t : t_list) {
    const MultiplierSpec phi = family(t);
    KernelOptions ko = opt;
    if (ko.jet_order < 0) ko.jet_order = std::min(phi.max_derivative(), std::max(m, 1));
    ko.buffer_rows = std::max(ko.buffer_rows, m);
    const double norm = biradial::moment_norm(kernel_coeffs(phi, grid, ko), m);
    if (!std::isfinite(norm))
      throw std::runtime_error("moment_growth_probe: non-finite moment at t=" +
                               std::to_string(t));
    out.ts.push_back(1.0 + t);
    out.norms.push_back(norm);
  }
  out.fit = num::fit_loglog(out.ts, out.norms);
  return out;
}

// ----------------------------------------------------------------- catalog

namespace {

// Smooth cutoff machinery: zeta(u) = e^{-1/u} for u > 0, 0 otherwise, glued
// into chi_low = zeta(2-2s)/(zeta(2-2s)+zeta(2s-1)), which is identically 1
// on [0,1/2], identically 0 on [1,infinity), and C^infinity in between.
Jet zeta_jet(const Jet& u) {
  if (u.value().real() <= 0.0) return Jet{};
  return num::jet_exp(-num::jet_inv(u));
}

Jet chi_low_jet(const Jet& s) {
  const double v = s.value().real();
  if (v <= 0.5) return Jet::constant(1.0);
  if (v >= 1.0) return Jet{};
  const Jet lo = zeta_jet(2.0 - 2.0 * s);
  const Jet hi = zeta_jet(-1.0 + 2.0 * s);
  return lo * num::jet_inv(lo + hi);
}

Jet chi_high_jet(const Jet& s) { return 1.0 + (-chi_low_jet(s)); }

MultiplierSpec from_jet(std::string label,
                        std::function<Jet(double)> jet_fn, double mu,
                        double gamma = 0, double t = 0) {
  MultiplierSpec s;
  s.label = std::move(label);
  s.jet = std::move(jet_fn);
  s.symbol = [fn = s.jet](double sigma) { return fn(sigma).value(); };
  for (int k = 1; k <= num::kJetOrder; ++k)
    s.derivatives.push_back(
        [fn = s.jet, k](double sigma) { return fn(sigma).derivative(k); });
  s.mu = mu;
  s.gamma = gamma;
  s.t = t;
  return s;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

MultiplierSpec heat_symbol(double t_heat) {
  return from_jet("heat(t=" + std::to_string(t_heat) + ")",
                  [t_heat](double sigma) {
                    return num::jet_exp(-t_heat * Jet::variable(sigma));
                  },
                  kInf, 0, t_heat);
}

MultiplierSpec bessel_symbol(double r) {
  return from_jet("bessel(r=" + std::to_string(r) + ")",
                  [r](double sigma) {
                    return num::jet_pow(1.0 + Jet::variable(sigma), -r / 2.0);
                  },
                  r / 2.0);
}

MultiplierSpec lp_symbol(int N) {
  if (N < 1) throw std::invalid_argument("lp_symbol: N must be >= 1");
  return from_jet("lp(N=" + std::to_string(N) + ")",
                  [N](double sigma) {
                    const Jet s = Jet::variable(sigma);
                    Jet p = Jet::constant(1.0);
                    for (int k = 0; k < N; ++k) p = p * s;
                    return p * num::jet_exp(-s);
                  },
                  kInf);
}

MultiplierSpec schrodinger_symbol(double nu, double r, double t) {
  if (nu <= 0) throw std::invalid_argument("schrodinger_symbol: nu must be > 0");
  auto jet_fn = [nu, r, t](double sigma) {
    const Jet s = Jet::variable(sigma);
    // phase accumulated in double-double, derivative structure around it
    const cplx base = num::unit_phase(t, sigma, nu);
    const Jet phase =
        num::jet_exp_rebased(cplx(0, t) * num::jet_pow(s, nu), base);
    if (r == 0) return phase;
    return phase * num::jet_pow(1.0 + s, -r / 2.0);
  };
  MultiplierSpec spec = from_jet("schrodinger(nu=" + std::to_string(nu) +
                                     ",r=" + std::to_string(r) +
                                     ",t=" + std::to_string(t) + ")",
                                 jet_fn, r / 2.0, nu, t);
  return spec;
}

MultiplierSpec mihlin_symbol() {
  return from_jet("mihlin",
                  [](double sigma) {
                    const Jet s = Jet::variable(sigma);
                    return s * num::jet_inv(1.0 + s);
                  },
                  0.0);
}

MultiplierSpec chi_low_symbol() {
  return from_jet("chi_low",
                  [](double sigma) { return chi_low_jet(Jet::variable(sigma)); },
                  kInf);
}

MultiplierSpec chi_high_symbol() {
  return from_jet("chi_high",
                  [](double sigma) { return chi_high_jet(Jet::variable(sigma)); },
                  0.0);
}

MultiplierSpec schrodinger_high(double nu, double r, double t) {
  if (nu <= 0) throw std::invalid_argument("schrodinger_high: nu must be > 0");
  auto jet_fn = [nu, r, t](double sigma) {
    const Jet s = Jet::variable(sigma);
    const Jet snu = num::jet_pow(s, nu);
    const cplx base = num::unit_phase(t, sigma, nu);
    const Jet phase = num::jet_exp_rebased(cplx(0, t) * snu, base);
    return phase * num::jet_pow(1.0 + s, -r / 2.0) *
           chi_high_jet((1.0 + t) * snu);
  };
  MultiplierSpec spec = from_jet("schrodinger_high(nu=" + std::to_string(nu) +
                                     ",r=" + std::to_string(r) +
                                     ",t=" + std::to_string(t) + ")",
                                 jet_fn, r / 2.0, nu, t);
  return spec;
}

const std::vector<SymbolInfo>& builtin_symbols() {
  static const std::vector<SymbolInfo> catalog = [] {
    std::vector<SymbolInfo> v;
    v.push_back({"heat",
                 "e^{-t sigma}",
                 {{"t", 1.0, false}},
                 [](const std::map<std::string, double>& a) {
                   return heat_symbol(a.at("t"));
                 }});
    v.push_back({"bessel",
                 "(1+sigma)^{-r/2}",
                 {{"r", 0.0, true}},
                 [](const std::map<std::string, double>& a) {
                   return bessel_symbol(a.at("r"));
                 }});
    v.push_back({"lp",
                 "sigma^N e^{-sigma}",
                 {{"N", 1.0, false}},
                 [](const std::map<std::string, double>& a) {
                   const double n = a.at("N");
                   if (n != std::floor(n) || n < 1)
                     throw std::runtime_error("lp: N must be a positive integer");
                   return lp_symbol(static_cast<int>(n));
                 }});
    v.push_back({"schrodinger",
                 "e^{i t sigma^nu} (1+sigma)^{-r/2}",
                 {{"nu", 1.0, false}, {"r", 0.0, false}, {"t", 0.0, false}},
                 [](const std::map<std::string, double>& a) {
                   return schrodinger_symbol(a.at("nu"), a.at("r"), a.at("t"));
                 }});
    v.push_back({"schrodinger_high",
                 "e^{i t sigma^nu} (1+sigma)^{-r/2} chi_high((1+t) sigma^nu)",
                 {{"nu", 1.0, false}, {"r", 0.0, true}, {"t", 0.0, false}},
                 [](const std::map<std::string, double>& a) {
                   return schrodinger_high(a.at("nu"), a.at("r"), a.at("t"));
                 }});
    v.push_back({"mihlin",
                 "sigma/(1+sigma)",
                 {},
                 [](const std::map<std::string, double>&) {
                   return mihlin_symbol();
                 }});
    v.push_back({"chi_low",
                 "smooth cutoff: 1 on [0,1/2], 0 on [1,inf)",
                 {},
                 [](const std::map<std::string, double>&) {
                   return chi_low_symbol();
                 }});
    v.push_back({"chi_high",
                 "1 - chi_low",
                 {},
                 [](const std::map<std::string, double>&) {
                   return chi_high_symbol();
                 }});
    return v;
  }();
  return catalog;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

MultiplierSpec parse_symbol(const std::string& text) {
  const std::string trimmed = strip(text);
  std::string name = trimmed;
  std::string args;
  const size_t paren = trimmed.find('(');
  if (paren != std::string::npos) {
    if (trimmed.back() != ')')
      throw std::runtime_error("symbol: missing ')' in '" + text + "'");
    name = strip(trimmed.substr(0, paren));
    args = trimmed.substr(paren + 1, trimmed.size() - paren - 2);
  }

  const SymbolInfo* info = nullptr;
  for (const auto& s : builtin_symbols())
    if (s.name == name) info = &s;
  if (!info) throw std::runtime_error("symbol: unknown name '" + name + "'");

  std::map<std::string, double> values;
  for (const auto& p : info->params)
    if (!p.required) values[p.key] = p.value;

  size_t pos = 0;
  while (pos < args.size()) {
    size_t comma = args.find(',', pos);
    if (comma == std::string::npos) comma = args.size();
    const std::string item = strip(args.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    const size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("symbol: expected key=value, got '" + item + "'");
    const std::string key = strip(item.substr(0, eq));
    const std::string val = strip(item.substr(eq + 1));
    const bool known = std::any_of(info->params.begin(), info->params.end(),
                                   [&](const SymbolParam& p) { return p.key == key; });
    if (!known)
      throw std::runtime_error("symbol: unknown parameter '" + key + "' for " +
                               name);
    char* end = nullptr;
    const double x = std::strtod(val.c_str(), &end);
    if (end == val.c_str() || *end != '\0')
      throw std::runtime_error("symbol: bad numeric value '" + val + "'");
    values[key] = x;
  }

  for (const auto& p : info->params)
    if (p.required && !values.count(p.key))
      throw std::runtime_error("symbol: missing required parameter '" + p.key +
                               "' for " + name);
  return info->make(values);
}

}  // namespace heisen::mult
