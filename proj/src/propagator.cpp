#include "leemodel/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "leemodel/errors.hpp"
#include "leemodel/renorm.hpp"

namespace leemodel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Sorted integration nodes on [lo, hi] refined geometrically above each
// feature scale, so that the adaptive rule never has to discover a
// logarithmic range on its own.
std::vector<double> radial_breakpoints(double lo, double hi, std::initializer_list<double> features) {
  std::vector<double> pts{lo, hi};
  for (double f : features) {
    if (!(f > 0.0) || !std::isfinite(f)) continue;
    for (double x = f; x < hi; x *= 4.0) {
      if (x > lo) pts.push_back(x);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Integrates phi(q) over [pts.front(), pts.back()] piece by piece and, when
// the support is unbounded, adds the tail [pts.back(), inf) through the
// substitution q = lambda * tan(t).
template <class T, class Phi>
void integrate_radial(PiecewiseIntegral<T>& acc, const Phi& phi, const std::vector<double>& pts,
                      bool unbounded, double lambda) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) acc.add(phi, pts[i], pts[i + 1]);
  if (!unbounded) return;
  const double t0 = std::atan(pts.back() / lambda);
  auto tail = [&](double t) -> T {
    const double c = std::cos(t);
    return phi(lambda * std::tan(t)) * (lambda / (c * c));
  };
  acc.add(tail, t0, kPi / 2.0);
}

void require_regulated(const FormFactor& ff) {
  if (ff.is_local()) {
    throw LeeError(ErrorCode::DivergentIntegral,
                   "the bare self-energy diverges for the local form factor; use the "
                   "renormalized propagator");
  }
}

// Principal value plus delta-function term of int_0^inf F(s)/(s - k^2 - i0) ds.
std::complex<double> scattering_bubble(const FormFactor& ff, double k_sq, const QuadratureOptions& opt) {
  const double lambda = *ff.lambda();
  const double s_end = ff.support_end_s();
  const bool unbounded = !std::isfinite(s_end);

  // Half-width of the symmetric subtraction window around k^2. It may not
  // straddle a discontinuity of F.
  double d = k_sq;
  if (!unbounded) d = std::min(d, std::abs(s_end - k_sq));
  if (!(d > 0.0)) {
    throw LeeError(ErrorCode::DivergentIntegral,
                   "on-shell momentum coincides with the sharp cutoff; the principal value "
                   "diverges logarithmically");
  }

  PiecewiseIntegral<double> acc(opt);
  const double f_on = ff.squared_at_s(k_sq);

  // Window [k^2 - d, k^2 + d], folded onto u in (0, d]. The subtracted
  // f(k)^2/(s - k^2) has zero principal value over a symmetric window.
  auto window = [&](double u) { return (ff.squared_at_s(k_sq + u) - ff.squared_at_s(k_sq - u)) / u; };
  for (const auto& [a, b] : {std::pair{0.0, 0.5 * d}, std::pair{0.5 * d, d}}) acc.add(window, a, b);

  auto phi = [&](double q) {
    const double s = q * q;
    return 2.0 * q * ff.squared_at_s(s) / (s - k_sq);
  };

  if (d < k_sq) {
    const double q_hi = std::sqrt(std::min(k_sq - d, s_end));
    integrate_radial(acc, phi, radial_breakpoints(0.0, q_hi, {std::sqrt(k_sq - d) / 4.0}), false,
                     lambda);
  }

  const double q_lo = std::sqrt(k_sq + d);
  if (unbounded) {
    const double q_split = std::max(4.0 * lambda, 2.0 * q_lo);
    integrate_radial(acc, phi, radial_breakpoints(q_lo, q_split, {q_lo, lambda}), true, lambda);
  } else if (q_lo < std::sqrt(s_end)) {
    integrate_radial(acc, phi, radial_breakpoints(q_lo, std::sqrt(s_end), {q_lo}), false, lambda);
  }

  return {acc.result("principal-value bubble integral"), kPi * f_on};
}

std::complex<double> off_axis_bubble(const FormFactor& ff, std::complex<double> w,
                                     const QuadratureOptions& opt) {
  const double lambda = *ff.lambda();
  const double s_end = ff.support_end_s();
  const bool unbounded = !std::isfinite(s_end);
  const double q_end = unbounded ? std::max({4.0 * lambda, 2.0 * std::sqrt(std::abs(w))})
                                 : std::sqrt(s_end);

  std::vector<double> pts = radial_breakpoints(0.0, q_end, {std::sqrt(std::abs(w)), lambda});
  if (w.real() > 0.0 && w.imag() != 0.0) {
    // Narrow peak of width ~ |Im w| / 2q_c around q_c = sqrt(Re w).
    const double qc = std::sqrt(w.real());
    const double width = std::abs(w.imag()) / (2.0 * qc);
    for (double x = width; x < qc + q_end; x *= 4.0) {
      if (qc - x > 0.0) pts.push_back(qc - x);
      if (qc + x < q_end) pts.push_back(qc + x);
    }
    if (qc < q_end) pts.push_back(qc);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  }

  PiecewiseIntegral<std::complex<double>> acc(opt);
  auto phi = [&](double q) -> std::complex<double> {
    const double s = q * q;
    return 2.0 * q * ff.squared_at_s(s) / (s - w);
  };
  integrate_radial(acc, phi, pts, unbounded, lambda);
  return acc.result("bubble integral");
}

}  // namespace

EvaluationPoint EvaluationPoint::below_threshold(double U) {
  if (!(U < 0.0) || !std::isfinite(U)) {
    throw LeeError(ErrorCode::InvalidArgument, "below-threshold point needs U < 0, got " + std::to_string(U));
  }
  return {Kind::BelowThreshold, {U, 0.0}};
}

EvaluationPoint EvaluationPoint::scattering(double E) {
  if (!(E > 0.0) || !std::isfinite(E)) {
    throw LeeError(ErrorCode::InvalidArgument, "scattering point needs E > 0, got " + std::to_string(E));
  }
  return {Kind::ScatteringLimit, {E, 0.0}};
}

EvaluationPoint EvaluationPoint::general(std::complex<double> U) {
  if (U.imag() == 0.0 || !std::isfinite(U.real()) || !std::isfinite(U.imag())) {
    throw LeeError(ErrorCode::InvalidArgument, "general evaluation point needs Im U != 0");
  }
  return {Kind::GeneralComplex, U};
}

std::complex<double> log_minus_u(const EvaluationPoint& at) {
  const auto U = at.energy();
  switch (at.kind()) {
    case EvaluationPoint::Kind::BelowThreshold:
      return {std::log(-U.real()), 0.0};
    case EvaluationPoint::Kind::ScatteringLimit:
      return {std::log(U.real()), -kPi};
    case EvaluationPoint::Kind::GeneralComplex:
      return std::log(-U);
  }
  return {};
}

std::complex<double> bubble_integral_quadrature(const FormFactor& ff, double mu,
                                                const EvaluationPoint& at,
                                                const QuadratureOptions& opt) {
  require_regulated(ff);
  const std::complex<double> w = 2.0 * mu * at.energy();
  switch (at.kind()) {
    case EvaluationPoint::Kind::BelowThreshold: {
      const double a = -w.real();
      const double lambda = *ff.lambda();
      const double s_end = ff.support_end_s();
      const bool unbounded = !std::isfinite(s_end);
      const double q_end = unbounded ? std::max(4.0 * lambda, 2.0 * std::sqrt(a)) : std::sqrt(s_end);
      PiecewiseIntegral<double> acc(opt);
      auto phi = [&](double q) {
        const double s = q * q;
        return 2.0 * q * ff.squared_at_s(s) / (s + a);
      };
      integrate_radial(acc, phi, radial_breakpoints(0.0, q_end, {std::sqrt(a), lambda}), unbounded,
                       lambda);
      return acc.result("below-threshold bubble integral");
    }
    case EvaluationPoint::Kind::ScatteringLimit:
      return scattering_bubble(ff, w.real(), opt);
    case EvaluationPoint::Kind::GeneralComplex:
      return off_axis_bubble(ff, w, opt);
  }
  return {};
}

std::complex<double> bubble_integral(const FormFactor& ff, double mu, const EvaluationPoint& at,
                                     const QuadratureOptions& opt) {
  require_regulated(ff);
  if (ff.kind() == FormFactor::Kind::SharpCutoff && at.kind() != EvaluationPoint::Kind::ScatteringLimit) {
    const double l_sq = ff.support_end_s();
    const std::complex<double> w = 2.0 * mu * at.energy();
    if (at.kind() == EvaluationPoint::Kind::BelowThreshold) return std::log1p(l_sq / -w.real());
    return std::log(l_sq - w) - std::log(-w);
  }
  return bubble_integral_quadrature(ff, mu, at, opt);
}

ComplexEnergyValue self_energy(const ModelParams& params, const EvaluationPoint& at,
                               const QuadratureOptions& opt) {
  const double g0_sq = params.couplings.g0_sq();
  if (g0_sq == 0.0) return {0.0, 0.0};
  return bubble_scale(params.mu(), g0_sq) * bubble_integral(params.ff, params.mu(), at, opt);
}

ComplexEnergyValue inverse_propagator_bare(const ModelParams& params, const EvaluationPoint& at,
                                           const QuadratureOptions& opt) {
  return params.couplings.U0 - at.energy() - self_energy(params, at, opt);
}

std::complex<double> renormalized_bracket(const PhysicalParams& phys, const EvaluationPoint& at) {
  const std::complex<double> U = at.energy();
  return log_minus_u(at) - std::log(phys.E0()) - (U + phys.E0()) * phys.inverse_bubble_scale();
}

ComplexEnergyValue inverse_propagator_renormalized(const PhysicalParams& phys,
                                                   const EvaluationPoint& at) {
  if (phys.is_delta_limit()) {
    throw LeeError(ErrorCode::DeltaLimitUnsupported,
                   "the inverse propagator grows like g0^2 in the delta limit; use "
                   "renormalized_bracket");
  }
  return bubble_scale(phys.mu(), phys.g0_sq().value()) * renormalized_bracket(phys, at);
}

PairCoefficients pair_coefficients(const ModelParams& params, double k, double q,
                                   const QuadratureOptions& opt) {
  if (!(k > 0.0) || !(q >= 0.0)) {
    throw LeeError(ErrorCode::InvalidArgument, "pair coefficients need k > 0 and q >= 0");
  }
  if (std::abs(q - k) < 1e-9 * std::max(1.0, k)) {
    throw LeeError(ErrorCode::OnShellSingularity,
                   "g(q) has the outgoing-wave pole at q = k; use the on-shell amplitude");
  }
  const double g0 = params.couplings.g0;
  if (g0 == 0.0) return {};

  const double mu = params.mu();
  const double coupling = g0 / (2.0 * kPi);
  const auto g_inv = inverse_propagator_bare(params, EvaluationPoint::scattering(relative_energy(mu, k)), opt);
  const std::complex<double> zeta = coupling * params.ff(k) / g_inv;
  const std::complex<double> g_of_q = coupling * zeta * params.ff(q) * (2.0 * mu) / (q * q - k * k);
  return {zeta, g_of_q};
}

}  // namespace leemodel
