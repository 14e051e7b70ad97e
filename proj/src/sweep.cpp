#include "leemodel/sweep.hpp"

#include <cmath>
#include <exception>
#include <string>

#include <omp.h>

#include "leemodel/errors.hpp"

namespace leemodel {

namespace {

// Runs body(i) for i in [0, n) across OpenMP threads. The first exception
// thrown by any iteration is rethrown once the loop has finished.
// Closed-form points cost the same everywhere and go in static blocks;
// quadrature points vary a lot in cost and are handed out one at a time.
enum class Cost { Uniform, Uneven };

template <class Body>
void parallel_for(std::size_t n, Cost cost, const Body& body) {
  std::exception_ptr failure;
  const auto count = static_cast<long long>(n);
  auto guarded = [&](long long i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(leemodel_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  };
  if (cost == Cost::Uniform) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) guarded(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) guarded(i);
  }
  if (failure) std::rethrow_exception(failure);
}

double coupling_point(double k, double mu, double E0, double g0_sq) {
  const auto g = g0_sq == std::numeric_limits<double>::infinity() ? CouplingSq::infinity()
                                                                   : CouplingSq::finite(g0_sq);
  return total_cross_section(PhysicalParams(E0, mu, g), k);
}

}  // namespace

std::vector<double> momentum_grid(double k_min, double k_max, int n, Spacing spacing) {
  if (!(k_min > 0.0) || !(k_max > k_min) || !std::isfinite(k_max)) {
    throw LeeError(ErrorCode::InvalidArgument, "momentum grid needs 0 < k_min < k_max");
  }
  if (n < 2) throw LeeError(ErrorCode::InvalidArgument, "momentum grid needs at least 2 points");
  std::vector<double> ks(static_cast<std::size_t>(n));
  const double last = n - 1;
  for (int i = 0; i < n; ++i) {
    const double t = i / last;
    ks[i] = spacing == Spacing::Linear ? k_min + t * (k_max - k_min)
                                       : k_min * std::pow(k_max / k_min, t);
  }
  ks.front() = k_min;
  ks.back() = k_max;
  return ks;
}

std::vector<CrossSectionPoint> sweep_serial(const PhysicalParams& phys, std::span<const double> ks) {
  std::vector<CrossSectionPoint> rows;
  rows.reserve(ks.size());
  for (double k : ks) rows.push_back(cross_section_point(phys, k));
  return rows;
}

std::vector<CrossSectionPoint> sweep_parallel(const PhysicalParams& phys, std::span<const double> ks) {
  std::vector<CrossSectionPoint> rows(ks.size());
  parallel_for(ks.size(), Cost::Uniform, [&](std::size_t i) { rows[i] = cross_section_point(phys, ks[i]); });
  return rows;
}

std::vector<double> regulated_sweep_serial(const ModelParams& params, std::span<const double> ks,
                                           const QuadratureOptions& opt) {
  std::vector<double> out;
  out.reserve(ks.size());
  for (double k : ks) out.push_back(regulated_differential_cross_section(params, k, opt));
  return out;
}

std::vector<double> regulated_sweep_parallel(const ModelParams& params, std::span<const double> ks,
                                             const QuadratureOptions& opt) {
  std::vector<double> out(ks.size());
  parallel_for(ks.size(), Cost::Uneven,
               [&](std::size_t i) { out[i] = regulated_differential_cross_section(params, ks[i], opt); });
  return out;
}

std::vector<double> coupling_sweep_serial(double k, double mu, double E0, std::span<const double> g0_sq) {
  std::vector<double> out;
  out.reserve(g0_sq.size());
  for (double g : g0_sq) out.push_back(coupling_point(k, mu, E0, g));
  return out;
}

std::vector<double> coupling_sweep_parallel(double k, double mu, double E0, std::span<const double> g0_sq) {
  std::vector<double> out(g0_sq.size());
  parallel_for(g0_sq.size(), Cost::Uniform, [&](std::size_t i) { out[i] = coupling_point(k, mu, E0, g0_sq[i]); });
  return out;
}

int parallel_threads() { return omp_get_max_threads(); }

}  // namespace leemodel
