#pragma once

#include <complex>

#include "leemodel/model.hpp"
#include "leemodel/quadrature.hpp"

namespace leemodel {

class PhysicalParams;

/// Self-energy and inverse-propagator values (energy units).
using ComplexEnergyValue = std::complex<double>;

/// Where in the complex U plane (U = E - P^2/2M_V) a propagator is evaluated.
///
/// ScatteringLimit(E) means U = E + i*eps with eps -> 0+, the outgoing-wave
/// prescription. It is handled analytically (principal value plus the
/// delta-function term), never with a finite eps.
class EvaluationPoint {
 public:
  enum class Kind { BelowThreshold, ScatteringLimit, GeneralComplex };

  /// U < 0 on the physical sheet.
  static EvaluationPoint below_threshold(double U);
  /// E > 0 approached from above the cut.
  static EvaluationPoint scattering(double E);
  /// Im U != 0.
  static EvaluationPoint general(std::complex<double> U);

  Kind kind() const noexcept { return kind_; }
  /// U itself; for ScatteringLimit the real limit value E.
  std::complex<double> energy() const noexcept { return U_; }

 private:
  EvaluationPoint(Kind kind, std::complex<double> U) : kind_(kind), U_(U) {}
  Kind kind_;
  std::complex<double> U_;
};

/// ln(-U) with the outgoing-wave branch: for ScatteringLimit(E) this is
/// ln(E) - i*pi; elsewhere it is the principal logarithm, which is
/// continuous with that limit from the upper half plane.
std::complex<double> log_minus_u(const EvaluationPoint& at);

/// mu * g0^2 / (2 pi): the natural energy scale of the Ntheta bubble.
inline double bubble_scale(double mu, double g0_sq) noexcept {
  return mu * g0_sq / (2.0 * 3.14159265358979323846);
}

/// Dimensionless bubble integral
///   I(w) = int_0^inf ds f(sqrt s)^2 / (s - w),  w = 2 mu U,
/// so that Sigma(U) = bubble_scale * I. Uses closed forms where they exist
/// (sharp cutoff off the real positive axis) and adaptive quadrature
/// otherwise. Throws DivergentIntegral for the local form factor.
std::complex<double> bubble_integral(const FormFactor& ff, double mu, const EvaluationPoint& at,
                                     const QuadratureOptions& opt = {});

/// Same integral, always by adaptive radial quadrature in |q|. Exposed so the
/// sharp-cutoff closed form can be checked against it.
std::complex<double> bubble_integral_quadrature(const FormFactor& ff, double mu,
                                                const EvaluationPoint& at,
                                                const QuadratureOptions& opt = {});

/// Sigma(U) = g0^2 int d^2q/(2pi)^2 2mu f^2 / (q^2 - 2mu U).
/// Im Sigma(E + i0) = mu g0^2 f(k)^2 / 2 exactly.
ComplexEnergyValue self_energy(const ModelParams& params, const EvaluationPoint& at,
                               const QuadratureOptions& opt = {});

/// U0 - U - Sigma(U).
ComplexEnergyValue inverse_propagator_bare(const ModelParams& params, const EvaluationPoint& at,
                                           const QuadratureOptions& opt = {});

/// The renormalized inverse propagator divided by bubble_scale:
///   B(U) = ln(-U/E0) - (U + E0) / (mu g0^2 / 2pi).
/// At ScatteringLimit this is ln(k^2/2mu E0) - i pi - (E + E0)/(mu g0^2/2pi).
/// Finite in the delta limit, where the last term is absent.
std::complex<double> renormalized_bracket(const PhysicalParams& phys, const EvaluationPoint& at);

/// G_V^{-1}(U) = -(U + E0) - (mu g0^2/2pi) ln(E0/(-U)) with the local limit
/// taken in the convergent integral. Vanishes at U = -E0. Throws
/// DeltaLimitUnsupported when g0 is infinite (use renormalized_bracket).
ComplexEnergyValue inverse_propagator_renormalized(const PhysicalParams& phys,
                                                   const EvaluationPoint& at);

struct PairCoefficients {
  std::complex<double> zeta;
  std::complex<double> g_of_q;
};

/// Coefficients of the V and off-shell Ntheta components of the outgoing
/// two-particle eigenstate with relative momentum k:
///   zeta   = (g0/2pi) f(k) / G_V^{-1}(k^2/2mu + i0)
///   g(q)   = (g0/2pi) zeta f(q) / ((q^2 - k^2)/2mu)
/// Throws OnShellSingularity for |q - k| < 1e-9 max(1, k).
PairCoefficients pair_coefficients(const ModelParams& params, double k, double q,
                                   const QuadratureOptions& opt = {});

}  // namespace leemodel
