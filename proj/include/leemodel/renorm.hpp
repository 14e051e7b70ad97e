#pragma once

#include <limits>

#include "leemodel/model.hpp"
#include "leemodel/quadrature.hpp"

namespace leemodel {

/// A squared coupling (energy units) that may also take the distinguished
/// delta-limit value g0 -> infinity.
class CouplingSq {
 public:
  static CouplingSq finite(double value);
  static CouplingSq infinity() noexcept { return CouplingSq(std::numeric_limits<double>::infinity()); }

  bool is_infinite() const noexcept { return value_ == std::numeric_limits<double>::infinity(); }
  /// +inf for the delta limit.
  double value() const noexcept { return value_; }

  friend bool operator==(const CouplingSq&, const CouplingSq&) = default;

 private:
  explicit CouplingSq(double v) noexcept : value_(v) {}
  double value_;
};

/// Renormalized description of the model: binding energy E0 of the V pole,
/// reduced mass, bare coupling (possibly infinite), and the cached
/// renormalized coupling g^2 = g0^2 / (1 + mu g0^2 / 2pi E0).
class PhysicalParams {
 public:
  /// Throws InvalidBoundState if E0 <= 0, NonPositiveMass if mu <= 0 and
  /// InvalidArgument if g0^2 is not strictly positive.
  PhysicalParams(double E0, double mu, CouplingSq g0_sq);

  double E0() const noexcept { return E0_; }
  double mu() const noexcept { return mu_; }
  CouplingSq g0_sq() const noexcept { return g0_sq_; }
  double g_sq() const noexcept { return g_sq_; }
  bool is_delta_limit() const noexcept { return g0_sq_.is_infinite(); }

  /// 2pi / (mu g0^2); zero in the delta limit.
  double inverse_bubble_scale() const noexcept { return inverse_scale_; }

 private:
  double E0_;
  double mu_;
  CouplingSq g0_sq_;
  double g_sq_;
  double inverse_scale_;
};

/// Binding energy E0 > 0 of the unique zero of U0 - U - Sigma(U) on U < 0.
/// Throws NoRoot for g0 = 0 or when no sign change is found, and
/// DivergentIntegral for the local form factor.
double solve_bound_state(const ModelParams& params, const QuadratureOptions& opt = {});

/// U0 = -E0 + Sigma(-E0): the bare internal energy that puts the pole at -E0.
double bare_internal_energy(double E0, const ModelParams& params, const QuadratureOptions& opt = {});

double renormalized_coupling_sq(CouplingSq g0_sq, double mu, double E0);

/// Inverse of renormalized_coupling_sq. g^2 = 2pi E0/mu maps to infinity;
/// anything above throws OutOfRange.
CouplingSq bare_coupling_sq(double g_sq, double mu, double E0);

/// lambda = g0^2 / U0, the coupling of the contact limit. Throws
/// NonPositiveU0 unless U0 > 0.
double contact_lambda(const ModelParams& params);

/// Solves for E0 and packages the renormalized parameters.
PhysicalParams physical_from_bare(const ModelParams& params, const QuadratureOptions& opt = {});

}  // namespace leemodel
