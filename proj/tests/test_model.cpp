#include "doctest.h"

#include <cmath>
#include <random>

#include "leemodel/errors.hpp"
#include "leemodel/model.hpp"

using namespace leemodel;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const LeeError& e) {
    return e.code();
  }
  FAIL("expected LeeError");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("reduced and total mass") {
  auto p = make_params(1, 1, 1, 1, FormFactor::local());
  CHECK(p.mu() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.masses.total() == 2.0);
  CHECK(make_params(1, 3, 1, 1, FormFactor::local()).mu() == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("validation") {
  CHECK(code_of([] { MassSpectrum(-1, 1); }) == ErrorCode::NonPositiveMass);
  CHECK(code_of([] { MassSpectrum(1, 0); }) == ErrorCode::NonPositiveMass);
  CHECK(code_of([] { MassSpectrum(1, NAN); }) == ErrorCode::NonPositiveMass);
  CHECK(code_of([] { make_params(1, 1, 1, -0.5, FormFactor::local()); }) == ErrorCode::NegativeCoupling);
  CHECK(code_of([] { make_params(1, 1, INFINITY, 1, FormFactor::local()); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { FormFactor::sharp_cutoff(0); }) == ErrorCode::NonPositiveCutoff);
  CHECK(code_of([] { FormFactor::gaussian(-2); }) == ErrorCode::NonPositiveCutoff);
}

TEST_CASE("form factor values") {
  CHECK(form_factor(FormFactor::local(), 17.3) == 1.0);
  CHECK(form_factor(FormFactor::sharp_cutoff(10), 5) == 1.0);
  CHECK(form_factor(FormFactor::sharp_cutoff(10), 15) == 0.0);
  CHECK(form_factor(FormFactor::gaussian(2), 0) == 1.0);
  CHECK(form_factor(FormFactor::gaussian(2), 2) == doctest::Approx(std::exp(-0.5)));
  CHECK(FormFactor::gaussian(2).squared_at_s(4.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(FormFactor::sharp_cutoff(3).support_end_s() == 9.0);
  CHECK(std::isinf(FormFactor::gaussian(3).support_end_s()));
  CHECK_FALSE(FormFactor::local().lambda().has_value());
  CHECK(*FormFactor::gaussian(3).lambda() == 3.0);
}

TEST_CASE("total energy") {
  auto p = make_params(1, 1, 1, 1, FormFactor::local());
  CHECK(total_energy(p, {0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(total_energy(p, {2.0, 1.0}) == doctest::Approx(2.0));
  CHECK(total_energy(p, {0.0, 1e-9}) == doctest::Approx(0.0));
}

TEST_CASE("property: 1/mu = 1/M + 1/m") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lg(-6, 6);
  for (int i = 0; i < 1000; ++i) {
    const double M = std::pow(10.0, lg(rng)), m = std::pow(10.0, lg(rng));
    MassSpectrum s(M, m);
    const double lhs = 1.0 / s.reduced(), rhs = 1.0 / M + 1.0 / m;
    REQUIRE(std::abs(lhs - rhs) <= 1e-14 * rhs);
  }
}

TEST_CASE("property: form factors bounded and non-increasing") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 50);
  for (auto ff : {FormFactor::local(), FormFactor::sharp_cutoff(7.5), FormFactor::gaussian(3.0)}) {
    for (int i = 0; i < 500; ++i) {
      double a = u(rng), b = u(rng);
      if (a > b) std::swap(a, b);
      const double fa = ff(a), fb = ff(b);
      REQUIRE(fa >= 0.0);
      REQUIRE(fa <= 1.0);
      REQUIRE(fb <= fa);
    }
  }
}
