#include "leemodel/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "leemodel/errors.hpp"
#include "leemodel/propagator.hpp"
#include "leemodel/scattering.hpp"
#include "leemodel/sweep.hpp"

namespace leemodel::verify {

namespace {

constexpr double kPi = std::numbers::pi;

// Support and profile F(s) = f(sqrt s)^2 of a regulated form factor, written
// out independently of FormFactor::squared_at_s. The sharp profile is 1 on
// the closed interval so that the trapezoid endpoint sees the left limit.
struct OracleProfile {
  std::function<double(double)> F;
  double s_end;
};

OracleProfile oracle_profile(const FormFactor& ff) {
  switch (ff.kind()) {
    case FormFactor::Kind::SharpCutoff: {
      const double l = *ff.lambda();
      return {[](double) { return 1.0; }, l * l};
    }
    case FormFactor::Kind::Gaussian: {
      const double l_sq = *ff.lambda() * *ff.lambda();
      // exp(-80) is below double resolution of every term that matters.
      return {[l_sq](double s) { return std::exp(-s / l_sq); }, 80.0 * l_sq};
    }
    case FormFactor::Kind::Local:
      break;
  }
  throw LeeError(ErrorCode::DivergentIntegral, "oracle quadrature needs a regulated form factor");
}

std::complex<double> bubble_oracle(const FormFactor& ff, std::complex<double> w, double tol) {
  const auto profile = oracle_profile(ff);
  return cauchy_integral(profile.F, {}, profile.s_end, w, tol);
}

// Distance in s from k^2 to the nearest feature of the integrand, used to
// size the eps ladder.
double eps_scale(const FormFactor& ff, double k_sq) {
  double scale = k_sq;
  if (ff.kind() == FormFactor::Kind::SharpCutoff) scale = std::min(scale, std::abs(ff.support_end_s() - k_sq));
  if (ff.kind() == FormFactor::Kind::Gaussian) scale = std::min(scale, ff.lambda().value() * ff.lambda().value());
  return scale;
}

// exp(-x) Ei(x). std::expint loses accuracy far down the negative axis, so
// for x < -1 this uses the continued fraction of exp(a) E1(a), a = -x, and
// far up the positive axis the asymptotic series.
double scaled_ei(double x) {
  if (x < -1.0) {
    const double a = -x;
    // Modified Lentz on exp(a) E1(a) = 1/(a+1- 1/(a+3- 4/(a+5- ...))).
    const double tiny = 1e-300;
    double b = a + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
      const double an = -static_cast<double>(i) * i;
      b += 2.0;
      d = 1.0 / (an * d + b);
      c = b + an / c;
      const double delta = c * d;
      h *= delta;
      if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return -h;
  }
  if (x > 40.0) {
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 40; ++n) {
      const double next = term * n / x;
      if (next > term) break;
      term = next;
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return sum / x;
  }
  return std::exp(-x) * std::expint(x);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return std::exp(d(rng));
}

}  // namespace

double relative_error(std::complex<double> value, std::complex<double> reference) {
  const double diff = std::abs(value - reference);
  if (diff == 0.0) return 0.0;
  const double scale = std::max(std::abs(value), std::abs(reference));
  return diff / scale;
}

OracleReport make_report(std::string target, std::complex<double> main, std::complex<double> oracle,
                         double rel_error, double tolerance, std::string note) {
  OracleReport r;
  r.target = std::move(target);
  r.value_main = main;
  r.value_oracle = oracle;
  r.rel_error = rel_error;
  r.tolerance = tolerance;
  r.status = rel_error <= tolerance ? OracleReport::Status::Passed : OracleReport::Status::Failed;
  r.note = std::move(note);
  return r;
}

RombergResult<std::complex<double>> romberg(const std::function<std::complex<double>(double)>& f,
                                            double a, double b, double rel_tol, int max_levels) {
  const double width = b - a;
  std::vector<std::complex<double>> prev{0.5 * width * (f(a) + f(b))};
  std::complex<double> sum = 0.5 * (f(a) + f(b));
  double abs_sum = 0.5 * (std::abs(f(a)) + std::abs(f(b)));
  double last_error = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= max_levels; ++level) {
    const long long n = 1LL << level;
    const double h = width / static_cast<double>(n);
    for (long long i = 1; i < n; i += 2) {
      const auto v = f(a + static_cast<double>(i) * h);
      sum += v;
      abs_sum += std::abs(v);
    }
    std::vector<std::complex<double>> row(static_cast<std::size_t>(level) + 1);
    row[0] = sum * h;
    double factor = 1.0;
    for (int m = 1; m <= level; ++m) {
      factor *= 4.0;
      row[m] = row[m - 1] + (row[m - 1] - prev[m - 1]) / (factor - 1.0);
    }
    last_error = std::abs(row[level] - prev[level - 1]);
    // Converged relative to the value or, under cancellation, to the L1 norm.
    const double scale = std::max(std::abs(row[level]), 1e-3 * abs_sum * h);
    if (level >= 5 && last_error <= rel_tol * scale) {
      return {row[level], last_error, level};
    }
    prev = std::move(row);
  }
  throw LeeError(ErrorCode::QuadratureFailure,
                 "Romberg oracle did not converge on [" + std::to_string(a) + ", " + std::to_string(b) +
                     "]; last correction " + std::to_string(last_error) + " of " + std::to_string(std::abs(prev.back())));
}

std::complex<double> cauchy_integral(const std::function<double(double)>& G, std::span<const double> features,
                                     double s_end, std::complex<double> w, double rel_tol) {
  double c = 0.0;
  double h = std::abs(w);
  if (w.real() > 0.0) {
    c = w.real();
    h = std::abs(w.imag());
  }
  if (!(h > 0.0)) {
    throw LeeError(ErrorCode::InvalidArgument, "oracle contour passes through the pole; add eps > 0");
  }
  std::vector<double> breaks{0.0, s_end};
  for (double f : features) {
    for (double s = f; s > 0.0 && s < s_end; s *= 4.0) breaks.push_back(s);
  }
  std::erase_if(breaks, [&](double s) { return s < 0.0 || s > s_end; });
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const std::complex<double> shift = c - w;
  auto integrand = [&](double tau) -> std::complex<double> {
    const double sh = h * std::sinh(tau);
    return G(c + sh) * (h * std::cosh(tau)) / (sh + shift);
  };
  std::complex<double> total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double ta = std::asinh((breaks[i] - c) / h);
    const double tb = std::asinh((breaks[i + 1] - c) / h);
    total += romberg(integrand, ta, tb, rel_tol).value;
  }
  return total;
}

std::complex<double> extrapolate_to_zero(const std::function<std::complex<double>(double)>& fn, double eps0) {
  const std::array<double, 3> x{eps0, eps0 / 10.0, eps0 / 100.0};
  std::complex<double> p = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    double weight = 1.0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) weight *= x[j] / (x[j] - x[i]);
    }
    p += weight * fn(x[i]);
  }
  return p;
}

std::complex<double> quad_self_energy(const ModelParams& params, std::complex<double> U, double epsilon,
                                      double tol) {
  const double g0_sq = params.couplings.g0_sq();
  if (g0_sq == 0.0) return 0.0;
  const double mu = params.mu();
  const std::complex<double> w = 2.0 * mu * (U + std::complex<double>(0.0, epsilon));
  return bubble_scale(mu, g0_sq) * bubble_oracle(params.ff, w, tol);
}

std::complex<double> quad_self_energy_scattering(const ModelParams& params, double E, double tol) {
  const double g0_sq = params.couplings.g0_sq();
  if (g0_sq == 0.0) return 0.0;
  const double mu = params.mu();
  const double k_sq = 2.0 * mu * E;
  const double eps0 = 1e-2 * eps_scale(params.ff, k_sq);
  const auto I = extrapolate_to_zero(
      [&](double eps) { return bubble_oracle(params.ff, {k_sq, eps}, tol); }, eps0);
  return bubble_scale(mu, g0_sq) * I;
}

std::complex<double> analytic_bubble(const FormFactor& ff, double w) {
  if (w == 0.0) throw LeeError(ErrorCode::DivergentIntegral, "bubble integral diverges at threshold");
  switch (ff.kind()) {
    case FormFactor::Kind::SharpCutoff: {
      const double l_sq = *ff.lambda() * *ff.lambda();
      if (w < 0.0) return std::log1p(l_sq / -w);
      return {std::log(std::abs(l_sq - w) / w), w < l_sq ? kPi : 0.0};
    }
    case FormFactor::Kind::Gaussian: {
      const double l_sq = *ff.lambda() * *ff.lambda();
      const double x = w / l_sq;
      const double re = -scaled_ei(x);
      return {re, w > 0.0 ? kPi * std::exp(-x) : 0.0};
    }
    case FormFactor::Kind::Local:
      break;
  }
  throw LeeError(ErrorCode::DivergentIntegral, "local form factor has no finite bubble integral");
}

std::complex<double> quad_pole_integral(double mu, double E0, std::complex<double> U, double tol) {
  const double b = 2.0 * mu * E0;
  const std::complex<double> w = 2.0 * mu * U;
  const double s_end = 1e17 * std::max(b, std::abs(w));
  const std::array<double, 1> features{b};
  const auto J = cauchy_integral([b](double s) { return 1.0 / (s + b); }, features, s_end, w, tol);
  return (mu * mu / kPi) * J;
}

std::complex<double> quad_pole_integral_scattering(double mu, double E0, double E, double tol) {
  const double k_sq = 2.0 * mu * E;
  const double b = 2.0 * mu * E0;
  const double s_end = 1e17 * std::max(b, k_sq);
  const auto J = extrapolate_to_zero(
      [&](double eps) {
        const std::array<double, 1> features{b};
        return cauchy_integral([b](double s) { return 1.0 / (s + b); }, features, s_end, {k_sq, eps}, tol);
      },
      1e-2 * k_sq);
  return (mu * mu / kPi) * J;
}

std::complex<double> pole_integral_closed_form(double mu, double E0, std::complex<double> U) {
  const std::complex<double> z = U + E0;
  const std::complex<double> x = z / E0;
  std::complex<double> ratio;  // ln(E0/(-U)) / (U + E0)
  if (std::abs(x) < 1e-4) {
    ratio = (1.0 + x / 2.0 + x * x / 3.0 + x * x * x / 4.0) / E0;
  } else {
    ratio = (std::log(E0) - std::log(-U)) / z;
  }
  return (mu / (2.0 * kPi)) * ratio;
}

OracleReport residue_check(const PhysicalParams& phys, double h, double tolerance) {
  if (phys.is_delta_limit()) {
    OracleReport r;
    r.target = "residue";
    r.tolerance = tolerance;
    r.status = OracleReport::Status::Excluded;
    r.note = "DeltaLimitExcluded: the slope at the pole diverges like g0^2";
    return r;
  }
  const double E0 = phys.E0();
  const double g0_sq = phys.g0_sq().value();
  auto G = [&](double U) {
    return inverse_propagator_renormalized(phys, EvaluationPoint::below_threshold(U)).real();
  };
  const double slope = (G(-E0 + h) - G(-E0 - h)) / (2.0 * h);
  const double expected_slope = -(1.0 + phys.mu() * g0_sq / (2.0 * kPi * E0));
  const double residue = g0_sq / (4.0 * kPi * kPi) / std::abs(slope);
  const double expected_residue = phys.g_sq() / (4.0 * kPi * kPi);
  const double err = std::max(relative_error(slope, expected_slope), relative_error(residue, expected_residue));
  return make_report("residue", slope, expected_slope, err, tolerance,
                     "residue " + std::to_string(residue) + " vs (g/2pi)^2 " + std::to_string(expected_residue));
}

LimitStudy limit_convergence_study(double k, double mu, double E0, std::span<const double> g0sq_grid) {
  if (g0sq_grid.size() < 2) throw LeeError(ErrorCode::DegenerateGrid, "need at least two couplings");
  for (double g : g0sq_grid) {
    if (!(g >= 1.0) || !std::isfinite(g)) {
      throw LeeError(ErrorCode::DegenerateGrid, "couplings must be finite and >= 1");
    }
  }
  const auto [lo, hi] = std::minmax_element(g0sq_grid.begin(), g0sq_grid.end());
  if (*hi < 1e3 * *lo) throw LeeError(ErrorCode::DegenerateGrid, "grid must span at least three decades");

  LimitStudy study;
  study.g0_sq.assign(g0sq_grid.begin(), g0sq_grid.end());
  study.sigma = coupling_sweep_parallel(k, mu, E0, g0sq_grid);
  study.sigma_delta = total_cross_section(PhysicalParams(E0, mu, CouplingSq::infinity()), k);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < study.sigma.size(); ++i) {
    const double err = std::abs(study.sigma[i] - study.sigma_delta);
    study.abs_error.push_back(err);
    if (err == 0.0) continue;
    const double x = -std::log(study.g0_sq[i]);
    const double y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double denom = n * sxx - sx * sx;
  if (n < 2 || !(denom > 0.0)) throw LeeError(ErrorCode::DegenerateGrid, "fewer than two usable points");
  study.slope = (n * sxy - sx * sy) / denom;
  return study;
}

PairResiduals pair_relation_residuals(const ModelParams& params, double k, std::span<const double> qs) {
  const double mu = params.mu();
  const double coupling = params.couplings.g0 / (2.0 * kPi);
  const double E = relative_energy(mu, k);

  PairResiduals out{0.0, 0.0};
  std::complex<double> zeta;
  std::complex<double> C;  // g(q) (q^2 - k^2) / f(q), constant in q
  bool have_c = false;
  for (double q : qs) {
    const auto pc = pair_coefficients(params, k, q);
    zeta = pc.zeta;
    const double fq = params.ff(q);
    const auto lhs = pc.g_of_q * (q * q - k * k) / (2.0 * mu);
    const auto rhs = coupling * pc.zeta * fq;
    out.second_relation = std::max(out.second_relation, relative_error(lhs, rhs));
    if (!have_c && fq > 0.5) {
      C = pc.g_of_q * (q * q - k * k) / fq;
      have_c = true;
    }
  }
  if (!have_c) {
    const double q_ref = 0.5 * k;
    const auto pc = pair_coefficients(params, k, q_ref);
    zeta = pc.zeta;
    C = pc.g_of_q * (q_ref * q_ref - k * k) / params.ff(q_ref);
  }
  // int d^2q g(q) f(q) = C int d^2q f(q)^2 / (q^2 - k^2 - i0) = C pi I(k^2).
  const auto overlap = C * kPi * analytic_bubble(params.ff, k * k);
  const auto lhs = (params.couplings.U0 - E) * zeta;
  const auto rhs = coupling * params.ff(k) + coupling * overlap;
  const double scale = std::max({std::abs(lhs), std::abs(coupling * params.ff(k)), std::abs(coupling * overlap)});
  out.first_relation = scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
  return out;
}

double differential_cross_section_via_amplitude(const PhysicalParams& phys, double k) {
  const double mu = phys.mu();
  const auto g_inv = inverse_propagator_renormalized(phys, EvaluationPoint::scattering(relative_energy(mu, k)));
  const double amp = phys.g0_sq().value() / (4.0 * kPi * kPi) / std::abs(g_inv);
  return std::pow(2.0 * kPi, 3) * (mu * mu / k) * amp * amp;
}

std::vector<OracleReport> run_oracle_suite(const SuiteSettings& settings) {
  std::mt19937_64 rng(settings.seed);
  const int draws = std::max(1, settings.draws);
  auto tol = [&](double nominal) { return settings.tolerance_override.value_or(nominal); };
  std::vector<OracleReport> reports;

  // Tracks the worst draw of a randomized comparison.
  struct Worst {
    double err = -1.0;
    std::complex<double> main, oracle;
    void update(std::complex<double> m, std::complex<double> o, double e) {
      if (e > err) {
        err = e;
        main = m;
        oracle = o;
      }
    }
  };
  auto regulated_draw = [&](FormFactor::Kind kind) {
    const double mu = log_uniform(rng, 0.05, 20.0);
    const double g0 = log_uniform(rng, 0.1, 10.0);
    const double lambda = log_uniform(rng, 0.5, 100.0);
    const auto ff = kind == FormFactor::Kind::SharpCutoff ? FormFactor::sharp_cutoff(lambda)
                                                          : FormFactor::gaussian(lambda);
    return make_params(2.0 * mu, 2.0 * mu, 1.0, g0, ff);
  };

  {
    Worst adaptive, romb;
    for (int i = 0; i < draws; ++i) {
      auto p = regulated_draw(FormFactor::Kind::SharpCutoff);
      const double U = -log_uniform(rng, 1e-3, 1e2);
      const auto at = EvaluationPoint::below_threshold(U);
      const auto closed = self_energy(p, at);
      const auto quad = bubble_scale(p.mu(), p.couplings.g0_sq()) * bubble_integral_quadrature(p.ff, p.mu(), at);
      const auto oracle = quad_self_energy(p, U, 0.0, 1e-12);
      adaptive.update(quad, closed, relative_error(quad, closed));
      romb.update(oracle, closed, relative_error(oracle, closed));
    }
    reports.push_back(make_report("self_energy.sharp.adaptive_vs_closed", adaptive.main, adaptive.oracle,
                                  adaptive.err, tol(1e-8)));
    reports.push_back(make_report("self_energy.sharp.romberg_vs_closed", romb.main, romb.oracle, romb.err,
                                  tol(1e-8)));
  }
  {
    Worst romb, expint;
    for (int i = 0; i < draws; ++i) {
      auto p = regulated_draw(FormFactor::Kind::Gaussian);
      const double U = -log_uniform(rng, 1e-3, 1e2);
      const auto main = self_energy(p, EvaluationPoint::below_threshold(U));
      const auto oracle = quad_self_energy(p, U, 0.0, 1e-10);
      const auto exact = bubble_scale(p.mu(), p.couplings.g0_sq()) * analytic_bubble(p.ff, 2.0 * p.mu() * U);
      romb.update(main, oracle, relative_error(main, oracle));
      expint.update(main, exact, relative_error(main, exact));
    }
    reports.push_back(make_report("self_energy.gaussian.adaptive_vs_romberg", romb.main, romb.oracle, romb.err,
                                  tol(1e-6)));
    reports.push_back(make_report("self_energy.gaussian.adaptive_vs_expint", expint.main, expint.oracle,
                                  expint.err, tol(1e-8)));
  }
  {
    Worst im, re;
    const int n = std::max(1, draws / 2);
    for (int i = 0; i < n; ++i) {
      auto p = regulated_draw(i % 2 == 0 ? FormFactor::Kind::Gaussian : FormFactor::Kind::SharpCutoff);
      const double lambda = *p.ff.lambda();
      // Keep k^2 away from the sharp edge, where the real part diverges.
      const double k = lambda * (i % 2 == 0 ? log_uniform(rng, 0.05, 3.0) : log_uniform(rng, 0.05, 0.8));
      const double E = relative_energy(p.mu(), k);
      const auto main = self_energy(p, EvaluationPoint::scattering(E));
      const auto oracle = quad_self_energy_scattering(p, E, 1e-12);
      im.update(main.imag(), oracle.imag(), relative_error(main.imag(), oracle.imag()));
      re.update(main.real(), oracle.real(), relative_error(main.real(), oracle.real()));
    }
    reports.push_back(make_report("self_energy.scattering.im_vs_eps_extrapolation", im.main, im.oracle, im.err,
                                  tol(1e-6)));
    reports.push_back(make_report("self_energy.scattering.re_vs_eps_extrapolation", re.main, re.oracle, re.err,
                                  tol(1e-6)));
  }
  {
    Worst w;
    for (int i = 0; i < draws; ++i) {
      const double mu = log_uniform(rng, 0.05, 20.0);
      const double E0 = log_uniform(rng, 1e-2, 1e2);
      const std::complex<double> U =
          i % 2 == 0 ? std::complex<double>(-log_uniform(rng, 1e-2, 1e2), 0.0)
                     : std::complex<double>(std::uniform_real_distribution<double>(-5.0, 5.0)(rng),
                                            log_uniform(rng, 1e-2, 1e1));
      const auto oracle = quad_pole_integral(mu, E0, U, 1e-12);
      const auto closed = pole_integral_closed_form(mu, E0, U);
      w.update(closed, oracle, relative_error(closed, oracle));
    }
    reports.push_back(make_report("pole_integral.closed_vs_romberg", w.main, w.oracle, w.err, tol(1e-8)));
  }

  auto physical_draw = [&](bool allow_delta) {
    const double mu = log_uniform(rng, 0.05, 20.0);
    const double E0 = log_uniform(rng, 1e-3, 1e3);
    const bool delta = allow_delta && std::uniform_real_distribution<double>(0.0, 1.0)(rng) < 0.2;
    const auto g0_sq = delta ? CouplingSq::infinity() : CouplingSq::finite(log_uniform(rng, 1e-3, 1e4));
    return PhysicalParams(E0, mu, g0_sq);
  };

  {
    Worst pole, residue;
    for (int i = 0; i < draws; ++i) {
      const auto phys = physical_draw(false);
      const auto at_pole = inverse_propagator_renormalized(phys, EvaluationPoint::below_threshold(-phys.E0()));
      pole.update(at_pole, 0.0, std::abs(at_pole));
      const auto r = residue_check(phys, 1e-5 * phys.E0(), 1e-6);
      residue.update(r.value_main, r.value_oracle, r.rel_error);
    }
    reports.push_back(make_report("renormalized_propagator.zero_at_pole", pole.main, pole.oracle, pole.err,
                                  tol(1e-12), "absolute error"));
    reports.push_back(make_report("renormalized_propagator.residue", residue.main, residue.oracle, residue.err,
                                  tol(1e-6)));
  }
  {
    Worst w;
    const double mu = 0.5;
    const double E0 = 1.0;
    for (int i = 0; i <= 48; ++i) {
      const double x = std::pow(10.0, -6.0 + i * 0.25);
      const double back = bare_coupling_sq(renormalized_coupling_sq(CouplingSq::finite(x), mu, E0), mu, E0).value();
      w.update(back, x, relative_error(back, x));
    }
    const bool inf_ok =
        bare_coupling_sq(renormalized_coupling_sq(CouplingSq::infinity(), mu, E0), mu, E0).is_infinite();
    reports.push_back(make_report("renorm.coupling_round_trip", w.main, w.oracle, inf_ok ? w.err : 1.0, tol(1e-12),
                                  inf_ok ? "infinity endpoint exact" : "infinity endpoint lost"));
  }
  {
    Worst w;
    const int n = std::max(1, draws / 5);
    for (int i = 0; i < n; ++i) {
      auto p = regulated_draw(i % 2 == 0 ? FormFactor::Kind::SharpCutoff : FormFactor::Kind::Gaussian);
      const double E0 = log_uniform(rng, 1e-3, 1e2);
      const double U0 = bare_internal_energy(E0, p);
      p.couplings.U0 = U0;
      const double back = solve_bound_state(p);
      w.update(back, E0, relative_error(back, E0));
    }
    reports.push_back(make_report("renorm.bound_state_round_trip", w.main, w.oracle, w.err, tol(1e-9)));
  }
  {
    Worst unitarity, consistency, pipeline;
    for (int i = 0; i < 10 * draws; ++i) {
      const auto phys = physical_draw(true);
      const double k = log_uniform(rng, 1e-3, 1e3) * std::sqrt(2.0 * phys.mu() * phys.E0());
      const auto S = s_matrix_element(phys, k);
      const auto B = bracket_terms(phys, k).bracket();
      unitarity.update(std::abs(S), 1.0, std::max(std::abs(std::abs(S) - 1.0), std::abs(B.imag() + kPi)));
      const double sigma = total_cross_section(phys, k);
      const double via_dphi = 2.0 * kPi * differential_cross_section(phys, k);
      const double s = std::sin(phase_shift(phys, k));
      const double via_phase = 4.0 / k * s * s;
      consistency.update(sigma, via_dphi,
                         std::max(relative_error(sigma, via_dphi), relative_error(sigma, via_phase)));
      if (!phys.is_delta_limit()) {
        const double a = differential_cross_section_via_amplitude(phys, k);
        const double b = differential_cross_section(phys, k);
        pipeline.update(a, b, relative_error(a, b));
      }
    }
    reports.push_back(make_report("scattering.unitarity", unitarity.main, unitarity.oracle, unitarity.err,
                                  tol(1e-12), "absolute error in |S0| and Im bracket"));
    reports.push_back(make_report("scattering.cross_section_consistency", consistency.main, consistency.oracle,
                                  consistency.err, tol(1e-12)));
    reports.push_back(make_report("scattering.amplitude_pipeline", pipeline.main, pipeline.oracle, pipeline.err,
                                  tol(1e-12)));
  }
  {
    Worst w;
    for (int i = 0; i < 20; ++i) {
      const double mu = log_uniform(rng, 0.05, 20.0);
      const double E0 = log_uniform(rng, 1e-3, 1e3);
      const double k = std::sqrt(2.0 * mu * E0);
      const double sigma = total_cross_section(PhysicalParams(E0, mu, CouplingSq::infinity()), k);
      w.update(sigma, 4.0 / k, relative_error(sigma, 4.0 / k));
    }
    reports.push_back(make_report("scattering.delta_limit_peak", w.main, w.oracle, w.err, tol(1e-12)));
  }
  {
    Worst w;
    const std::array<double, 6> qs{0.1, 0.5, 1.7, 3.0, 6.0, 12.0};
    for (int i = 0; i < 10; ++i) {
      auto p = regulated_draw(i % 2 == 0 ? FormFactor::Kind::SharpCutoff : FormFactor::Kind::Gaussian);
      p.couplings.U0 = std::uniform_real_distribution<double>(-2.0, 4.0)(rng);
      const double k = *p.ff.lambda() * log_uniform(rng, 0.05, 0.8);
      std::vector<double> q_samples;
      for (double q : qs) q_samples.push_back(q * k);
      const auto r = pair_relation_residuals(p, k, q_samples);
      w.update(r.first_relation, r.second_relation, std::max(r.first_relation, r.second_relation));
    }
    reports.push_back(make_report("pair_coefficients.linear_relations", w.main, w.oracle, w.err, tol(1e-10),
                                  "value_main/value_oracle hold the two residuals"));
  }
  {
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(std::pow(10.0, 2.0 + 0.2 * i));
    for (const auto& [k, expected, width] : {std::tuple{2.0, 1.0, 0.05}, std::tuple{1.0, 2.0, 0.10}}) {
      const auto study = limit_convergence_study(k, 0.5, 1.0, grid);
      const double err = std::abs(study.slope - expected);
      auto r = make_report("limit.slope_k=" + std::to_string(k).substr(0, 3), study.slope, expected, err,
                           settings.tolerance_override.value_or(width), "absolute slope deviation");
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

}  // namespace leemodel::verify
