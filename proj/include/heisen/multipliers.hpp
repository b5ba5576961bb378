#pragma once

// Spectral multipliers of the sub-Laplacian: a symbol phi acts on coefficient
// tables as multiplication by phi(|lambda|(d+2n)), and its convolution kernel
// is the synthesis of those samples.  This header carries the symbol type
// (with optional analytic derivatives), the built-in catalog, kernel
// synthesis/norms, joint (-Delta, S) symbols, and the moment-growth probe
// used by the dispersive estimates.

#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heisen/biradial.hpp"
#include "heisen/jets.hpp"
#include "heisen/numutil.hpp"

namespace heisen::mult {

using cplx = std::complex<double>;
using biradial::BiradialFunction;
using biradial::SpectralGrid;

// A multiplier symbol.  `symbol` alone is enough to apply the operator;
// derivative information (preferably the full `jet`) unlocks the analytic
// d/dlambda channels that the Z-calculus needs to stay exact.
struct MultiplierSpec {
  std::string label;
  std::function<cplx(double)> symbol;  // phi(sigma), sigma >= 0
  // phi and its derivatives to order 4 in one evaluation; when set, it is the
  // authoritative source and `derivatives` below are views into it.
  std::function<num::Jet(double)> jet;
  std::vector<std::function<cplx(double)>> derivatives;  // [k-1] = phi^(k)
  double gamma = 0;  // growth exponent (descriptive)
  // decay exponent a in |phi(sigma)| ~ (1+sigma)^{-a}; the kernel is L^2
  // exactly when a > Q/4, which is what the admissibility flag reports
  double mu = 0;
  double t = 0;  // time parameter (descriptive)

  int max_derivative() const {
    return jet ? num::kJetOrder : static_cast<int>(derivatives.size());
  }
};

// Symbol of both commuting generators: applied as Phi(|lambda|(d+2n), -i*lambda),
// the second slot being the exact G-side image of the central derivative S.
struct JointMultiplierSpec {
  std::string label;
  std::function<cplx(double sigma, cplx s_hat)> symbol;
  int lambda_degree = 0;  // declared polynomial degree in the second slot
};

struct KernelOptions {
  int jet_order = -1;  // -1: every derivative the symbol offers (up to 4)
  int buffer_rows = 0;
  double tail_tol = 1e-3;  // infinity disables the check
};

// F(n, lambda) = phi(|lambda|(d+2n)) with analytic derivative channels
// d^c/dlambda^c = (sgn(lambda)(d+2n))^c phi^(c)(sigma) when available.
BiradialFunction kernel_coeffs(const MultiplierSpec& phi,
                               const SpectralGrid& grid,
                               const KernelOptions& opt = {});

// Pointwise product F * phi(|lambda|(d+2n)); derivative channels are carried
// through by the Leibniz rule up to the order both factors support.
BiradialFunction apply(const MultiplierSpec& phi, const BiradialFunction& F);

BiradialFunction apply_joint(const JointMultiplierSpec& Phi,
                             const BiradialFunction& F);

// synthesize(kernel_coeffs(phi), p)
cplx kernel_at(const MultiplierSpec& phi, const SpectralGrid& grid,
               const group::GroupPoint& p, const KernelOptions& opt = {});

struct KernelNormResult {
  double value = 0;  // +infinity when the row masses do not decay summably
  bool admissible = false;  // declared decay exponent mu > Q/4
  double tail_fraction = 0;
  // log-log slope of the top row masses when they signal divergence
  std::optional<double> divergence_exponent;
};

// Plancherel norm of the kernel, with divergence detected from the decay
// rate of the per-row masses rather than reported as a large finite number.
KernelNormResult l2_kernel_norm(const MultiplierSpec& phi,
                                const SpectralGrid& grid);

struct MomentGrowth {
  num::LineFit fit;  // log moment_norm against log(1+t)
  std::vector<double> ts;
  std::vector<double> norms;
};

// Least-squares growth exponent of the m-th kernel moment along a family
// t -> phi_t.
MomentGrowth moment_growth_probe(
    const std::function<MultiplierSpec(double)>& family, int m,
    const std::vector<double>& t_list, const SpectralGrid& grid,
    const KernelOptions& opt = {});

// ------------------------------------------------------------- catalog

struct SymbolParam {
  std::string key;
  double value = 0;  // default when not required
  bool required = false;
};

struct SymbolInfo {
  std::string name;
  std::string summary;
  std::vector<SymbolParam> params;
  std::function<MultiplierSpec(const std::map<std::string, double>&)> make;
};

// heat(t), bessel(r), lp(N), schrodinger(nu, r, t), mihlin, chi_low,
// chi_high -- each with analytic derivatives to order 4.
const std::vector<SymbolInfo>& builtin_symbols();

// Parse `name` or `name(key=value, ...)` against the catalog; throws
// std::runtime_error naming the offending token on failure.
MultiplierSpec parse_symbol(const std::string& text);

// Convenience constructors used throughout probes and tests.
MultiplierSpec heat_symbol(double t_heat);
MultiplierSpec bessel_symbol(double r);
MultiplierSpec lp_symbol(int N);
MultiplierSpec schrodinger_symbol(double nu, double r, double t);
MultiplierSpec mihlin_symbol();
MultiplierSpec chi_low_symbol();
MultiplierSpec chi_high_symbol();
// High-frequency dispersive family e^{it sigma^nu} (1+sigma)^{-r/2}
// chi_high((1+t) sigma^nu).
MultiplierSpec schrodinger_high(double nu, double r, double t);

}  // namespace heisen::mult
