#include "doctest.h"

#include <cmath>
#include <cstring>
#include <numbers>

#include "leemodel/errors.hpp"
#include "leemodel/sweep.hpp"

using namespace leemodel;
using std::numbers::pi;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("momentum grids") {
  auto lin = momentum_grid(1, 3, 5, Spacing::Linear);
  REQUIRE(lin.size() == 5);
  CHECK(lin.front() == 1.0);
  CHECK(lin.back() == 3.0);
  CHECK(lin[2] == doctest::Approx(2.0));
  auto lg = momentum_grid(0.1, 10, 50, Spacing::Log);
  CHECK(lg.size() == 50);
  CHECK(lg.front() == 0.1);
  CHECK(lg.back() == 10.0);
  CHECK(lg[1] / lg[0] == doctest::Approx(lg[49] / lg[48]));
  CHECK_THROWS_AS(momentum_grid(0, 1, 5, Spacing::Log), LeeError);
  CHECK_THROWS_AS(momentum_grid(2, 1, 5, Spacing::Linear), LeeError);
  CHECK_THROWS_AS(momentum_grid(1, 2, 1, Spacing::Linear), LeeError);
}

TEST_CASE("serial and parallel sweeps agree bit for bit") {
  const auto ks = momentum_grid(0.01, 100, 400, Spacing::Log);
  for (auto g : {CouplingSq::finite(3.0), CouplingSq::infinity()}) {
    PhysicalParams phys(1.3, 0.7, g);
    const auto a = sweep_serial(phys, ks);
    const auto b = sweep_parallel(phys, ks);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(same_bits(a[i].k, b[i].k));
      REQUIRE(same_bits(a[i].sigma, b[i].sigma));
      REQUIRE(same_bits(a[i].dsigma_dphi, b[i].dsigma_dphi));
      REQUIRE(same_bits(a[i].delta0, b[i].delta0));
    }
  }

  auto p = make_params(1, 1, 1, 1, FormFactor::gaussian(5));
  const auto kr = momentum_grid(0.1, 8, 40, Spacing::Linear);
  const auto ra = regulated_sweep_serial(p, kr);
  const auto rb = regulated_sweep_parallel(p, kr);
  for (std::size_t i = 0; i < ra.size(); ++i) REQUIRE(same_bits(ra[i], rb[i]));

  std::vector<double> gs{1e2, 1e3, 1e4, INFINITY};
  const auto ca = coupling_sweep_serial(2.0, 0.5, 1.0, gs);
  const auto cb = coupling_sweep_parallel(2.0, 0.5, 1.0, gs);
  for (std::size_t i = 0; i < ca.size(); ++i) REQUIRE(same_bits(ca[i], cb[i]));
}

TEST_CASE("delta-limit sweep peaks at k^2 = 2 mu E0") {
  PhysicalParams phys(1.0, 0.5, CouplingSq::infinity());
  const auto rows = sweep_parallel(phys, momentum_grid(0.1, 10, 51, Spacing::Log));
  // odd point count on a symmetric log grid puts k = 1 at the centre
  CHECK(rows[25].k == doctest::Approx(1.0));
  CHECK(rows[25].sigma == doctest::Approx(4.0));
  // sigma itself grows like 1/k at small k; the unitarity bound is on k sigma
  for (const auto& r : rows) CHECK(r.k * r.sigma <= rows[25].k * rows[25].sigma);
}

TEST_CASE("parallel sweep propagates numerical errors") {
  auto p = make_params(1, 1, 1, 1, FormFactor::local());
  std::vector<double> ks{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(regulated_sweep_parallel(p, ks), LeeError);
  CHECK_THROWS_AS(regulated_sweep_serial(p, ks), LeeError);
}
