#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "leemodel/errors.hpp"
#include "leemodel/propagator.hpp"
#include "leemodel/renorm.hpp"

using namespace leemodel;
using std::numbers::pi;
using cd = std::complex<double>;

TEST_CASE("evaluation point validation") {
  CHECK_THROWS_AS(EvaluationPoint::below_threshold(0.0), LeeError);
  CHECK_THROWS_AS(EvaluationPoint::scattering(-1.0), LeeError);
  CHECK_THROWS_AS(EvaluationPoint::general({1.0, 0.0}), LeeError);
  CHECK(log_minus_u(EvaluationPoint::scattering(2.0)).imag() == doctest::Approx(-pi));
  CHECK(log_minus_u(EvaluationPoint::scattering(2.0)).real() == doctest::Approx(std::log(2.0)));
  // continuity of the principal branch with the outgoing-wave limit
  const auto near = log_minus_u(EvaluationPoint::general({2.0, 1e-12}));
  CHECK(near.imag() == doctest::Approx(-pi).epsilon(1e-10));
}

TEST_CASE("sharp cutoff self-energy closed form") {
  auto p = make_params(1, 1, 1, 1, FormFactor::sharp_cutoff(10));
  const auto s = self_energy(p, EvaluationPoint::below_threshold(-1));
  CHECK(s.real() == doctest::Approx(0.5 / (2 * pi) * std::log(101.0)).epsilon(1e-14));
  CHECK(s.imag() == 0.0);
  CHECK(s.real() == doctest::Approx(0.36727).epsilon(1e-5));
  const auto q = bubble_scale(0.5, 1.0) * bubble_integral_quadrature(p.ff, 0.5, EvaluationPoint::below_threshold(-1));
  CHECK(std::abs(q - s) <= 1e-10 * std::abs(s));
}

TEST_CASE("zero coupling gives zero self-energy") {
  for (auto ff : {FormFactor::local(), FormFactor::sharp_cutoff(3), FormFactor::gaussian(3)}) {
    auto p = make_params(1, 1, 3, 0, ff);
    CHECK(self_energy(p, EvaluationPoint::below_threshold(-1)) == cd(0.0));
    CHECK(self_energy(p, EvaluationPoint::scattering(2)) == cd(0.0));
    CHECK(inverse_propagator_bare(p, EvaluationPoint::below_threshold(-1)) == cd(4.0));
  }
}

TEST_CASE("local form factor diverges") {
  auto p = make_params(1, 1, 1, 1, FormFactor::local());
  try {
    self_energy(p, EvaluationPoint::below_threshold(-1));
    FAIL("no throw");
  } catch (const LeeError& e) {
    CHECK(e.code() == ErrorCode::DivergentIntegral);
  }
}

TEST_CASE("imaginary part on the cut") {
  // near-local Gaussian: f(k)^2 ~ 1 so Im Sigma ~ mu g0^2 / 2 = 0.25
  auto p = make_params(1, 1, 1, 1, FormFactor::gaussian(1e3));
  const auto s = self_energy(p, EvaluationPoint::scattering(2.0));
  CHECK(s.imag() == doctest::Approx(0.25).epsilon(1e-6));

  auto sharp = make_params(1, 1, 1, 1, FormFactor::sharp_cutoff(10));
  const double k = 2.0;
  const auto inv = inverse_propagator_bare(sharp, EvaluationPoint::scattering(relative_energy(0.5, k)));
  CHECK(inv.imag() == doctest::Approx(-0.25).epsilon(1e-12));
  // above the cutoff the vertex vanishes
  const auto above = self_energy(sharp, EvaluationPoint::scattering(relative_energy(0.5, 12.0)));
  CHECK(above.imag() == 0.0);
}

TEST_CASE("sharp cutoff edge is divergent") {
  auto p = make_params(1, 1, 1, 1, FormFactor::sharp_cutoff(2));
  CHECK_THROWS_AS(self_energy(p, EvaluationPoint::scattering(relative_energy(0.5, 2.0))), LeeError);
}

TEST_CASE("bound-state root of the bare inverse propagator") {
  auto p = make_params(1, 1, 2, std::sqrt(2 * pi), FormFactor::sharp_cutoff(10));
  const double E0 = solve_bound_state(p);
  const auto inv = inverse_propagator_bare(p, EvaluationPoint::below_threshold(-E0));
  CHECK(std::abs(inv) < 1e-10);
}

TEST_CASE("renormalized inverse propagator") {
  PhysicalParams phys(1.0, 0.5, CouplingSq::finite(4 * pi));
  CHECK(std::abs(inverse_propagator_renormalized(phys, EvaluationPoint::below_threshold(-1.0))) <= 1e-12);
  const auto on = inverse_propagator_renormalized(phys, EvaluationPoint::scattering(1.0));
  CHECK(on.real() == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(on.imag() == doctest::Approx(-pi).epsilon(1e-14));

  PhysicalParams delta(1.0, 0.5, CouplingSq::infinity());
  CHECK_THROWS_AS(inverse_propagator_renormalized(delta, EvaluationPoint::scattering(1.0)), LeeError);
  const double E = 3.7;
  const auto diff = renormalized_bracket(delta, EvaluationPoint::scattering(E)) -
                    renormalized_bracket(phys, EvaluationPoint::scattering(E));
  CHECK(diff.real() == doctest::Approx((E + 1.0) * 2 * pi / (0.5 * 4 * pi)).epsilon(1e-14));
  CHECK(diff.imag() == 0.0);
}

TEST_CASE("pair coefficients") {
  auto p = make_params(1, 1, 1, 1, FormFactor::sharp_cutoff(10));
  const auto c = pair_coefficients(p, 1.0, 2.0);
  CHECK(std::abs(c.zeta) > 0.0);
  CHECK(pair_coefficients(p, 1.0, 12.0).g_of_q == cd(0.0));
  auto free = make_params(1, 1, 1, 0, FormFactor::sharp_cutoff(10));
  CHECK(pair_coefficients(free, 1.0, 2.0).zeta == cd(0.0));
  CHECK(pair_coefficients(free, 1.0, 2.0).g_of_q == cd(0.0));
  try {
    pair_coefficients(p, 1.0, 1.0 + 1e-12);
    FAIL("no throw");
  } catch (const LeeError& e) {
    CHECK(e.code() == ErrorCode::OnShellSingularity);
  }
}

TEST_CASE("property: Sigma increasing on U < 0 and sign of Im on the cut") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 2);
  for (auto ff : {FormFactor::sharp_cutoff(5), FormFactor::gaussian(5)}) {
    auto p = make_params(1, 2, 1, 1.3, ff);
    for (int i = 0; i < 40; ++i) {
      double a = -std::pow(10.0, u(rng)), b = -std::pow(10.0, u(rng));
      if (a > b) std::swap(a, b);
      if (a == b) continue;
      REQUIRE(self_energy(p, EvaluationPoint::below_threshold(a)).real() <
              self_energy(p, EvaluationPoint::below_threshold(b)).real());
      const double E = std::pow(10.0, u(rng));
      const auto at = EvaluationPoint::scattering(E);
      if (ff.kind() == FormFactor::Kind::SharpCutoff && std::abs(std::sqrt(2 * p.mu() * E) - 5.0) < 1e-3) continue;
      REQUIRE(self_energy(p, at).imag() >= 0.0);
      REQUIRE(inverse_propagator_bare(p, at).imag() <= 0.0);
    }
  }
}

TEST_CASE("property: Schwarz reflection on the quadrature path") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-4, 4), im(0.01, 3);
  for (auto ff : {FormFactor::sharp_cutoff(3), FormFactor::gaussian(3)}) {
    auto p = make_params(1, 1, 1, 1, ff);
    for (int i = 0; i < 30; ++i) {
      const cd U(re(rng), im(rng));
      const auto up = bubble_integral_quadrature(p.ff, p.mu(), EvaluationPoint::general(U));
      const auto down = bubble_integral_quadrature(p.ff, p.mu(), EvaluationPoint::general(std::conj(U)));
      REQUIRE(std::abs(down - std::conj(up)) <= 1e-12 * std::abs(up));
    }
  }
}

TEST_CASE("sharp closed form matches quadrature off axis") {
  auto p = make_params(1, 1, 1, 1, FormFactor::sharp_cutoff(4));
  for (cd U : {cd(-2, 0.5), cd(3, 0.1), cd(10, -2)}) {
    const auto at = EvaluationPoint::general(U);
    const auto a = bubble_integral(p.ff, p.mu(), at);
    const auto b = bubble_integral_quadrature(p.ff, p.mu(), at);
    CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
  }
}
