#pragma once

#include <complex>

#include "leemodel/model.hpp"
#include "leemodel/quadrature.hpp"
#include "leemodel/renorm.hpp"

namespace leemodel {

/// The two real pieces of the on-shell bracket
///   B(k) = L - i pi - c,  L = ln(k^2 / 2 mu E0),  c = (k^2/2mu + E0) / (mu g0^2 / 2pi).
/// c is exactly zero in the delta limit.
struct BracketTerms {
  double log_term;
  double correction;

  std::complex<double> bracket() const noexcept;
};

BracketTerms bracket_terms(const PhysicalParams& phys, double k);

/// One row of a cross-section sweep.
struct CrossSectionPoint {
  double k;
  double dsigma_dphi;
  double sigma;
  double delta0;
  std::complex<double> s0;
  std::complex<double> bracket;
};

/// On-shell amplitude (g0/2pi)^2 / G_V^{-1}(k^2/2mu + i0) = 1 / (2 pi mu B(k)).
/// Finite in the delta limit.
std::complex<double> t_amplitude(const PhysicalParams& phys, double k);

/// dsigma/dphi = (2pi/k) |B(k)|^{-2}, per unit scattering angle.
double differential_cross_section(const PhysicalParams& phys, double k);

/// sigma = 4 pi^2 / (k [pi^2 + (L - c)^2]).
double total_cross_section(const PhysicalParams& phys, double k);

/// s-wave phase shift in (0, pi) with cot(delta0) = (c - L) / pi.
double phase_shift(const PhysicalParams& phys, double k);

/// S0 = exp(2 i delta0) = (c - L + i pi) / (c - L - i pi).
std::complex<double> s_matrix_element(const PhysicalParams& phys, double k);

CrossSectionPoint cross_section_point(const PhysicalParams& phys, double k);

/// dsigma/dphi of the regulated theory straight from the bare inverse
/// propagator, with no renormalization:
///   (2pi)^3 (mu^2/k) |(g0/2pi)^2 f(k)^2 / G_V^{-1}(k^2/2mu + i0)|^2.
double regulated_differential_cross_section(const ModelParams& params, double k,
                                            const QuadratureOptions& opt = {});

}  // namespace leemodel
