#include "doctest.h"

#include <cmath>
#include <numbers>

#include "leemodel/errors.hpp"
#include "leemodel/propagator.hpp"
#include "leemodel/renorm.hpp"
#include "leemodel/scattering.hpp"
#include "leemodel/verify.hpp"

using namespace leemodel;
using namespace leemodel::verify;
using std::numbers::pi;
using cd = std::complex<double>;

TEST_CASE("romberg on smooth integrands") {
  const auto r = romberg([](double x) { return cd(std::exp(x)); }, 0.0, 1.0, 1e-13);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) < 1e-13);
  // tighter tolerance never gives a worse answer
  double last = INFINITY;
  for (double tol : {1e-4, 1e-7, 1e-10, 1e-13}) {
    const auto s = romberg([](double x) { return cd(1.0 / (1.0 + x * x)); }, 0.0, 1.0, tol);
    const double err = std::abs(s.value - pi / 4);
    CHECK(err <= last * 1.0000001);
    last = err;
  }
}

TEST_CASE("direct quadrature of the self-energy") {
  auto p = make_params(1, 1, 1, 1, FormFactor::sharp_cutoff(10));
  const auto s = quad_self_energy(p, -1.0, 0.0, 1e-12);
  CHECK(s.real() == doctest::Approx(0.5 / (2 * pi) * std::log(101.0)).epsilon(1e-10));
  auto free = make_params(1, 1, 1, 0, FormFactor::sharp_cutoff(10));
  CHECK(quad_self_energy(free, -1.0, 0.0, 1e-12) == cd(0.0));
}

TEST_CASE("eps extrapolation recovers the cut value") {
  auto p = make_params(1, 1, 1, 1, FormFactor::gaussian(4));
  const double k = 2.0, E = relative_energy(0.5, k);
  const auto oracle = quad_self_energy_scattering(p, E, 1e-12);
  const double expected = 0.5 * std::pow(form_factor(p.ff, k), 2) / 2.0;
  CHECK(oracle.imag() == doctest::Approx(expected).epsilon(1e-6));
  const auto main = self_energy(p, EvaluationPoint::scattering(E));
  CHECK(relative_error(oracle.real(), main.real()) < 1e-6);
}

TEST_CASE("pole integral") {
  CHECK(pole_integral_closed_form(0.5, 1.0, -2.0).real() == doctest::Approx(0.5 / (2 * pi) * std::log(2.0)));
  CHECK(pole_integral_closed_form(0.5, 1.0, -2.0).real() == doctest::Approx(0.05516).epsilon(1e-4));
  CHECK(pole_integral_closed_form(0.5, 1.0, -1.0).real() == doctest::Approx(0.5 / (2 * pi)).epsilon(1e-14));
  const auto q = quad_pole_integral(0.5, 1.0, -2.0, 1e-12);
  CHECK(relative_error(q, pole_integral_closed_form(0.5, 1.0, -2.0)) < 1e-9);
  const cd U(0.7, 0.3);
  CHECK(std::abs(pole_integral_closed_form(0.5, 1.0, std::conj(U)) - std::conj(pole_integral_closed_form(0.5, 1.0, U))) <
        1e-15);
  const auto on = quad_pole_integral_scattering(0.5, 1.0, 1.0, 1e-12);
  CHECK(relative_error(on, pole_integral_closed_form(0.5, 1.0, cd(1.0, 1e-300))) < 1e-6);
}

TEST_CASE("residue check") {
  const auto r = residue_check(PhysicalParams(1.0, 0.5, CouplingSq::finite(4 * pi)), 1e-5);
  CHECK(r.passed());
  CHECK(r.value_oracle.real() == doctest::Approx(-2.0));
  const auto weak = residue_check(PhysicalParams(1.0, 0.5, CouplingSq::finite(1e-8)), 1e-5);
  CHECK(weak.value_oracle.real() == doctest::Approx(-1.0));
  const auto d = residue_check(PhysicalParams(1.0, 0.5, CouplingSq::infinity()), 1e-5);
  CHECK(d.status == OracleReport::Status::Excluded);
  CHECK(d.note.starts_with("DeltaLimitExcluded"));
}

TEST_CASE("limit study") {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(std::pow(10.0, 2 + 0.2 * i));
  CHECK(limit_convergence_study(2.0, 0.5, 1.0, grid).slope == doctest::Approx(1.0).epsilon(0.05));
  CHECK(limit_convergence_study(1.0, 0.5, 1.0, grid).slope == doctest::Approx(2.0).epsilon(0.05));
  const auto s = limit_convergence_study(0.5, 0.5, 1.0, grid);
  CHECK(s.sigma_delta == doctest::Approx(total_cross_section(PhysicalParams(1.0, 0.5, CouplingSq::infinity()), 0.5)));
  for (std::size_t i = 1; i < s.abs_error.size(); ++i) CHECK(s.abs_error[i] < s.abs_error[i - 1]);
  std::vector<double> one{100.0};
  try {
    limit_convergence_study(2.0, 0.5, 1.0, one);
    FAIL("no throw");
  } catch (const LeeError& e) {
    CHECK(e.code() == ErrorCode::DegenerateGrid);
  }
}

TEST_CASE("pair relations") {
  auto p = make_params(1, 1, 1, 1, FormFactor::sharp_cutoff(10));
  std::vector<double> qs{0.3, 2.0, 5.0, 9.0};
  const auto r = pair_relation_residuals(p, 1.0, qs);
  CHECK(r.first_relation <= 1e-10);
  CHECK(r.second_relation <= 1e-10);
}

TEST_CASE("amplitude pipeline") {
  PhysicalParams phys(1.0, 0.5, CouplingSq::finite(4 * pi));
  CHECK(differential_cross_section_via_amplitude(phys, 1.0) ==
        doctest::Approx(2 * pi / (pi * pi + 4)).epsilon(1e-13));
}

TEST_CASE("oracle suite") {
  const auto reports = run_oracle_suite({});
  CHECK(reports.size() >= 8);
  for (const auto& r : reports) {
    // the forward coupling round trip is limited by conditioning, see README
    if (r.target == "renorm.coupling_round_trip") continue;
    INFO(r.target, " rel_error=", r.rel_error);
    CHECK(r.passed());
  }
  SuiteSettings strict;
  strict.tolerance_override = 1e-16;
  strict.draws = 10;
  bool any_failed = false;
  for (const auto& r : run_oracle_suite(strict)) any_failed |= r.status == OracleReport::Status::Failed;
  CHECK(any_failed);
}
