#include "leemodel/renorm.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "leemodel/errors.hpp"
#include "leemodel/propagator.hpp"

namespace leemodel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Bisection refined by secant steps. A secant step is tried only once the
// bracket is within a factor of four, and any step that fails to halve the
// bracket forces a bisection next, so convergence is never slower than
// bisection.
template <class F>
double bracketed_root(const F& f, double lo, double f_lo, double hi, double f_hi, double rel_tol) {
  bool force_bisect = false;
  for (int iter = 0; iter < 1000; ++iter) {
    const double width = hi - lo;
    if (width <= rel_tol * hi) break;
    double next = hi > 4.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (!force_bisect && hi <= 4.0 * lo) {
      const double secant = hi - f_hi * (hi - lo) / (f_hi - f_lo);
      if (secant > lo && secant < hi) next = secant;
    }
    const double f_next = f(next);
    if (f_next == 0.0) return next;
    if (f_next < 0.0) {
      lo = next;
      f_lo = f_next;
    } else {
      hi = next;
      f_hi = f_next;
    }
    force_bisect = (hi - lo) > 0.5 * width;
  }
  return f_hi < -f_lo ? hi : lo;
}

}  // namespace

CouplingSq CouplingSq::finite(double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw LeeError(ErrorCode::NegativeCoupling,
                   "squared coupling must be finite and >= 0, got " + std::to_string(value));
  }
  return CouplingSq(value);
}

PhysicalParams::PhysicalParams(double E0, double mu, CouplingSq g0_sq)
    : E0_(E0), mu_(mu), g0_sq_(g0_sq) {
  if (!(E0 > 0.0) || !std::isfinite(E0)) {
    throw LeeError(ErrorCode::InvalidBoundState, "E0 must be positive, got " + std::to_string(E0));
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw LeeError(ErrorCode::NonPositiveMass, "reduced mass must be positive");
  }
  if (!(g0_sq.value() > 0.0)) {
    throw LeeError(ErrorCode::InvalidArgument, "physical parameterization needs g0^2 > 0");
  }
  g_sq_ = renormalized_coupling_sq(g0_sq, mu, E0);
  inverse_scale_ = g0_sq.is_infinite() ? 0.0 : kTwoPi / (mu * g0_sq.value());
}

double bare_internal_energy(double E0, const ModelParams& params, const QuadratureOptions& opt) {
  if (!(E0 > 0.0)) {
    throw LeeError(ErrorCode::InvalidBoundState, "E0 must be positive, got " + std::to_string(E0));
  }
  return -E0 + self_energy(params, EvaluationPoint::below_threshold(-E0), opt).real();
}

double solve_bound_state(const ModelParams& params, const QuadratureOptions& opt) {
  if (params.ff.is_local()) {
    throw LeeError(ErrorCode::DivergentIntegral,
                   "the bound-state condition needs a regulated form factor");
  }
  if (params.couplings.g0 == 0.0) {
    throw LeeError(ErrorCode::NoRoot, "free theory (g0 = 0) has no bound-state pole");
  }
  // h(E) = G_V^{-1}(-E) is strictly increasing in E, -> -inf as E -> 0+ and
  // -> +inf as E -> inf, so the zero is unique.
  auto h = [&](double E) {
    return inverse_propagator_bare(params, EvaluationPoint::below_threshold(-E), opt).real();
  };

  double lo = 1e-12;
  double hi = 1.0;
  double f_lo = h(lo);
  while (f_lo >= 0.0) {
    if (f_lo == 0.0) return lo;
    hi = lo;
    lo *= 0.1;
    if (lo < 1e-300) throw LeeError(ErrorCode::NoRoot, "no sign change above E0 = 1e-300");
    f_lo = h(lo);
  }
  double f_hi = h(hi);
  while (f_hi <= 0.0) {
    if (f_hi == 0.0) return hi;
    lo = hi;
    f_lo = f_hi;
    hi *= 10.0;
    if (hi > 1e300) throw LeeError(ErrorCode::NoRoot, "no sign change below E0 = 1e300");
    f_hi = h(hi);
  }
  return bracketed_root(h, lo, f_lo, hi, f_hi, 1e-12);
}

double renormalized_coupling_sq(CouplingSq g0_sq, double mu, double E0) {
  if (g0_sq.is_infinite()) return kTwoPi * E0 / mu;
  const double x = g0_sq.value();
  return x / (1.0 + mu * x / (kTwoPi * E0));
}

CouplingSq bare_coupling_sq(double g_sq, double mu, double E0) {
  const double bound = kTwoPi * E0 / mu;
  if (!(g_sq >= 0.0)) {
    throw LeeError(ErrorCode::OutOfRange, "renormalized coupling must be >= 0");
  }
  if (g_sq > bound) {
    throw LeeError(ErrorCode::OutOfRange, "g^2 = " + std::to_string(g_sq) +
                                              " exceeds 2pi E0/mu = " + std::to_string(bound) +
                                              "; no bare theory exists");
  }
  if (g_sq == bound) return CouplingSq::infinity();
  const double denom = 1.0 - mu * g_sq / (kTwoPi * E0);
  return CouplingSq::finite(g_sq / denom);
}

double contact_lambda(const ModelParams& params) {
  const double U0 = params.couplings.U0;
  if (!(U0 > 0.0)) {
    throw LeeError(ErrorCode::NonPositiveU0, "the contact limit needs U0 > 0, got " + std::to_string(U0));
  }
  return params.couplings.g0_sq() / U0;
}

PhysicalParams physical_from_bare(const ModelParams& params, const QuadratureOptions& opt) {
  const double E0 = solve_bound_state(params, opt);
  return PhysicalParams(E0, params.mu(), CouplingSq::finite(params.couplings.g0_sq()));
}

}  // namespace leemodel
