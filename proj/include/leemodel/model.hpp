#pragma once

#include <optional>
#include <variant>

namespace leemodel {

// Natural units with hbar = 1 throughout. Any self-consistent choice of mass
// and energy units works; nothing is converted.

/// Masses of the N and theta particles and the derived V mass and reduced
/// mass. The V mass obeys the Bargmann rule M_V = M + m.
class MassSpectrum {
 public:
  /// Throws LeeError(NonPositiveMass) unless both masses are positive and finite.
  MassSpectrum(double M, double m);

  double M() const noexcept { return M_; }
  double m() const noexcept { return m_; }
  double total() const noexcept { return total_; }
  double reduced() const noexcept { return reduced_; }

 private:
  double M_;
  double m_;
  double total_;
  double reduced_;
};

struct LocalFormFactor {};
struct SharpCutoff {
  double lambda;
};
struct GaussianCutoff {
  double lambda;
};

/// Vertex form factor f(omega), normalized so that f(0) = 1. Local is the
/// f == 1 endpoint of both regulated families.
class FormFactor {
 public:
  enum class Kind { Local, SharpCutoff, Gaussian };

  static FormFactor local() { return FormFactor(LocalFormFactor{}); }
  static FormFactor sharp_cutoff(double lambda);
  static FormFactor gaussian(double lambda);

  Kind kind() const noexcept;
  bool is_local() const noexcept { return kind() == Kind::Local; }
  /// Cutoff momentum; nullopt for Local.
  std::optional<double> lambda() const noexcept;

  double operator()(double omega) const noexcept;
  /// f(sqrt(s))^2 as a function of s = omega^2.
  double squared_at_s(double s) const noexcept;
  /// Upper end of the support in s = omega^2 (infinity unless sharp).
  double support_end_s() const noexcept;

  const std::variant<LocalFormFactor, SharpCutoff, GaussianCutoff>& variant() const noexcept {
    return v_;
  }

 private:
  explicit FormFactor(std::variant<LocalFormFactor, SharpCutoff, GaussianCutoff> v) : v_(v) {}
  std::variant<LocalFormFactor, SharpCutoff, GaussianCutoff> v_;
};

/// Bare couplings. Only g0^2 enters observables, so g0 >= 0.
struct BareCouplings {
  double U0 = 0.0;
  double g0 = 0.0;

  double g0_sq() const noexcept { return g0 * g0; }
};

struct ModelParams {
  MassSpectrum masses;
  BareCouplings couplings;
  FormFactor ff;

  double mu() const noexcept { return masses.reduced(); }
};

struct KinematicState {
  double P = 0.0;
  double k = 1.0;
};

/// Validated construction of the regularized theory's full input.
ModelParams make_params(double M, double m, double U0, double g0, FormFactor ff);

double form_factor(const FormFactor& ff, double omega);

/// E = P^2 / (2 M_V) + k^2 / (2 mu).
double total_energy(const ModelParams& params, const KinematicState& kin);

/// k^2 / (2 mu): relative-motion energy at momentum k.
inline double relative_energy(double mu, double k) noexcept { return k * k / (2.0 * mu); }

}  // namespace leemodel
