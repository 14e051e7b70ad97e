#include "leemodel/scattering.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "leemodel/errors.hpp"
#include "leemodel/propagator.hpp"

namespace leemodel {

namespace {

constexpr double kPi = std::numbers::pi;

void require_momentum(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw LeeError(ErrorCode::InvalidArgument, "momentum must be positive, got " + std::to_string(k));
  }
}

}  // namespace

std::complex<double> BracketTerms::bracket() const noexcept {
  return {log_term - correction, -kPi};
}

BracketTerms bracket_terms(const PhysicalParams& phys, double k) {
  require_momentum(k);
  const double E = relative_energy(phys.mu(), k);
  const double L = std::log(k * k / (2.0 * phys.mu() * phys.E0()));
  // The delta limit is its own closed form, not a large-g0 evaluation.
  if (phys.is_delta_limit()) return {L, 0.0};
  return {L, (E + phys.E0()) * phys.inverse_bubble_scale()};
}

std::complex<double> t_amplitude(const PhysicalParams& phys, double k) {
  return 1.0 / (2.0 * kPi * phys.mu() * bracket_terms(phys, k).bracket());
}

double differential_cross_section(const PhysicalParams& phys, double k) {
  return (2.0 * kPi / k) / std::norm(bracket_terms(phys, k).bracket());
}

double total_cross_section(const PhysicalParams& phys, double k) {
  const auto [L, c] = bracket_terms(phys, k);
  const double x = L - c;
  return 4.0 * kPi * kPi / (k * (kPi * kPi + x * x));
}

double phase_shift(const PhysicalParams& phys, double k) {
  const auto [L, c] = bracket_terms(phys, k);
  return std::atan2(kPi, c - L);
}

std::complex<double> s_matrix_element(const PhysicalParams& phys, double k) {
  const auto [L, c] = bracket_terms(phys, k);
  const std::complex<double> num{c - L, kPi};
  return num / std::conj(num);
}

CrossSectionPoint cross_section_point(const PhysicalParams& phys, double k) {
  return {k,
          differential_cross_section(phys, k),
          total_cross_section(phys, k),
          phase_shift(phys, k),
          s_matrix_element(phys, k),
          bracket_terms(phys, k).bracket()};
}

double regulated_differential_cross_section(const ModelParams& params, double k,
                                            const QuadratureOptions& opt) {
  require_momentum(k);
  const double mu = params.mu();
  const double f = params.ff(k);
  const double coupling_sq = params.couplings.g0_sq() / (4.0 * kPi * kPi);
  if (coupling_sq == 0.0 || f == 0.0) return 0.0;
  const auto g_inv = inverse_propagator_bare(params, EvaluationPoint::scattering(relative_energy(mu, k)), opt);
  const double amp = coupling_sq * f * f / std::abs(g_inv);
  return std::pow(2.0 * kPi, 3) * (mu * mu / k) * amp * amp;
}

}  // namespace leemodel
