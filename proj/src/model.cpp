#include "leemodel/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "leemodel/errors.hpp"

namespace leemodel {

namespace {

void check_cutoff(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw LeeError(ErrorCode::NonPositiveCutoff,
                   "cutoff must be positive and finite, got " + std::to_string(lambda));
  }
}

}  // namespace

MassSpectrum::MassSpectrum(double M, double m) : M_(M), m_(m) {
  if (!(M > 0.0) || !(m > 0.0) || !std::isfinite(M) || !std::isfinite(m)) {
    throw LeeError(ErrorCode::NonPositiveMass,
                   "masses must be positive, got M=" + std::to_string(M) +
                       " m=" + std::to_string(m));
  }
  total_ = M + m;
  reduced_ = M * m / total_;
}

FormFactor FormFactor::sharp_cutoff(double lambda) {
  check_cutoff(lambda);
  return FormFactor(SharpCutoff{lambda});
}

FormFactor FormFactor::gaussian(double lambda) {
  check_cutoff(lambda);
  return FormFactor(GaussianCutoff{lambda});
}

FormFactor::Kind FormFactor::kind() const noexcept {
  switch (v_.index()) {
    case 1: return Kind::SharpCutoff;
    case 2: return Kind::Gaussian;
    default: return Kind::Local;
  }
}

std::optional<double> FormFactor::lambda() const noexcept {
  if (const auto* s = std::get_if<SharpCutoff>(&v_)) return s->lambda;
  if (const auto* g = std::get_if<GaussianCutoff>(&v_)) return g->lambda;
  return std::nullopt;
}

double FormFactor::operator()(double omega) const noexcept {
  switch (kind()) {
    case Kind::Local:
      return 1.0;
    case Kind::SharpCutoff:
      return omega < std::get<SharpCutoff>(v_).lambda ? 1.0 : 0.0;
    case Kind::Gaussian: {
      const double l = std::get<GaussianCutoff>(v_).lambda;
      return std::exp(-omega * omega / (2.0 * l * l));
    }
  }
  return 1.0;
}

double FormFactor::squared_at_s(double s) const noexcept {
  switch (kind()) {
    case Kind::Local:
      return 1.0;
    case Kind::SharpCutoff: {
      const double l = std::get<SharpCutoff>(v_).lambda;
      return s < l * l ? 1.0 : 0.0;
    }
    case Kind::Gaussian: {
      const double l = std::get<GaussianCutoff>(v_).lambda;
      return std::exp(-s / (l * l));
    }
  }
  return 1.0;
}

double FormFactor::support_end_s() const noexcept {
  if (const auto* s = std::get_if<SharpCutoff>(&v_)) return s->lambda * s->lambda;
  return std::numeric_limits<double>::infinity();
}

ModelParams make_params(double M, double m, double U0, double g0, FormFactor ff) {
  MassSpectrum masses(M, m);
  if (!(g0 >= 0.0) || !std::isfinite(g0)) {
    throw LeeError(ErrorCode::NegativeCoupling,
                   "g0 must be finite and >= 0, got " + std::to_string(g0));
  }
  if (!std::isfinite(U0)) {
    throw LeeError(ErrorCode::InvalidArgument, "U0 must be finite");
  }
  if (auto l = ff.lambda()) check_cutoff(*l);
  return ModelParams{masses, BareCouplings{U0, g0}, ff};
}

double form_factor(const FormFactor& ff, double omega) { return ff(omega); }

double total_energy(const ModelParams& params, const KinematicState& kin) {
  return kin.P * kin.P / (2.0 * params.masses.total()) + relative_energy(params.mu(), kin.k);
}

}  // namespace leemodel
