#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leemodel/model.hpp"
#include "leemodel/renorm.hpp"

namespace leemodel::verify {

// Independent oracles for the main computational path. The main path
// integrates by adaptive Gauss-Kronrod subdivision in |q|; everything here
// uses a fixed-order composite rule (Romberg: trapezoid plus Richardson
// extrapolation) in a sinh-mapped s = q^2 variable, finite-eps evaluation
// with eps -> 0 extrapolation, closed forms via the exponential integral,
// and finite differences.

struct OracleReport {
  enum class Status { Passed, Failed, Excluded };

  std::string target;
  std::complex<double> value_main;
  std::complex<double> value_oracle;
  double rel_error = 0.0;
  double tolerance = 0.0;
  Status status = Status::Failed;
  std::string note;

  bool passed() const noexcept { return status == Status::Passed; }
};

/// Fills status from rel_error <= tolerance.
OracleReport make_report(std::string target, std::complex<double> main, std::complex<double> oracle,
                         double rel_error, double tolerance, std::string note = {});

double relative_error(std::complex<double> value, std::complex<double> reference);

template <class T>
struct RombergResult {
  T value;
  double error;
  int levels;
};

/// Romberg integration of a smooth integrand on [a, b]. Stops when two
/// successive diagonal entries agree to rel_tol (after at least five
/// levels) or after max_levels halvings.
RombergResult<std::complex<double>> romberg(const std::function<std::complex<double>(double)>& f,
                                            double a, double b, double rel_tol, int max_levels = 24);

/// int_0^s_end G(s) / (s - w) ds for smooth G.
/// Uses s = c + h sinh(tau) centred on the nearest approach of w to the
/// real axis, so both narrow peaks (small Im w) and long logarithmic ranges
/// are smooth in tau. Each scale in `features` (where G itself varies) adds
/// geometric panel breaks above it. Needs Im w != 0 or Re w < 0.
std::complex<double> cauchy_integral(const std::function<double(double)>& G,
                                     std::span<const double> features, double s_end,
                                     std::complex<double> w, double rel_tol);

/// Quadratic Richardson extrapolation to eps = 0 of fn(eps) sampled at
/// eps0, eps0/10, eps0/100.
std::complex<double> extrapolate_to_zero(const std::function<std::complex<double>(double)>& fn,
                                         double eps0);

/// Sigma(U + i eps) by direct quadrature of the 2D integral. Regulated form
/// factors only; needs Im U + eps != 0 or Re U < 0.
std::complex<double> quad_self_energy(const ModelParams& params, std::complex<double> U,
                                      double epsilon, double tol);

/// Sigma(E + i0) from finite-eps quadrature extrapolated to eps -> 0.
std::complex<double> quad_self_energy_scattering(const ModelParams& params, double E, double tol);

/// Closed forms of the bubble integral on the real axis, used as a third
/// route: log for the sharp cutoff, -exp(-x) Ei(x) for the Gaussian.
/// w < 0 below threshold; w > 0 returns the outgoing-wave value.
std::complex<double> analytic_bubble(const FormFactor& ff, double w);

/// K(U) = int d^2q/(2pi)^2 (2mu)^2 / ((q^2 - 2mu U)(q^2 + 2mu E0)), so that
/// the renormalized inverse propagator is -(U + E0)(1 + g0^2 K(U)).
std::complex<double> quad_pole_integral(double mu, double E0, std::complex<double> U, double tol);
/// Same at U = E + i0 via eps extrapolation.
std::complex<double> quad_pole_integral_scattering(double mu, double E0, double E, double tol);
/// (mu/2pi) ln(E0/(-U)) / (U + E0) with the removable point U = -E0.
std::complex<double> pole_integral_closed_form(double mu, double E0, std::complex<double> U);

/// Central-difference slope of the renormalized inverse propagator at the
/// pole against -(1 + mu g0^2/(2pi E0)), and the amplitude residue against
/// (g/2pi)^2. Excluded in the delta limit.
OracleReport residue_check(const PhysicalParams& phys, double h, double tolerance = 1e-6);

struct LimitStudy {
  std::vector<double> g0_sq;
  std::vector<double> sigma;
  std::vector<double> abs_error;
  double sigma_delta = 0.0;
  double slope = 0.0;
};

/// Least-squares slope of ln|sigma(g0^2) - sigma(inf)| against ln(1/g0^2).
/// Throws DegenerateGrid unless the grid has >= 2 finite values >= 1
/// spanning at least three decades.
LimitStudy limit_convergence_study(double k, double mu, double E0, std::span<const double> g0sq_grid);

struct PairResiduals {
  double first_relation;
  double second_relation;
};

/// Substitutes pair_coefficients into both linear relations between zeta
/// and g(q), with the q-integral taken from analytic_bubble.
PairResiduals pair_relation_residuals(const ModelParams& params, double k, std::span<const double> qs);

/// dsigma/dphi through the general amplitude formula with the renormalized
/// inverse propagator, as opposed to the reduced bracket form.
double differential_cross_section_via_amplitude(const PhysicalParams& phys, double k);

struct SuiteSettings {
  std::uint64_t seed = 20240531;
  int draws = 100;
  /// Replaces every per-check tolerance when set.
  std::optional<double> tolerance_override;
};

/// Every oracle comparison, one report per check.
std::vector<OracleReport> run_oracle_suite(const SuiteSettings& settings);

}  // namespace leemodel::verify
