#pragma once

#include <span>
#include <vector>

#include "leemodel/model.hpp"
#include "leemodel/quadrature.hpp"
#include "leemodel/renorm.hpp"
#include "leemodel/scattering.hpp"

namespace leemodel {

enum class Spacing { Linear, Log };

/// n >= 2 momenta from k_min to k_max inclusive. Throws InvalidArgument
/// unless 0 < k_min < k_max.
std::vector<double> momentum_grid(double k_min, double k_max, int n, Spacing spacing);

// Every kernel below has a serial reference and an OpenMP version. Rows are
// written by index, so both produce identical vectors in grid order.

std::vector<CrossSectionPoint> sweep_serial(const PhysicalParams& phys, std::span<const double> ks);
std::vector<CrossSectionPoint> sweep_parallel(const PhysicalParams& phys, std::span<const double> ks);

/// Regulated dsigma/dphi on a momentum grid (one principal-value quadrature
/// per point).
std::vector<double> regulated_sweep_serial(const ModelParams& params, std::span<const double> ks,
                                           const QuadratureOptions& opt = {});
std::vector<double> regulated_sweep_parallel(const ModelParams& params, std::span<const double> ks,
                                             const QuadratureOptions& opt = {});

/// Total cross section at fixed k for each bare coupling in the grid.
std::vector<double> coupling_sweep_serial(double k, double mu, double E0, std::span<const double> g0_sq);
std::vector<double> coupling_sweep_parallel(double k, double mu, double E0, std::span<const double> g0_sq);

/// Threads the parallel kernels will use.
int parallel_threads();

}  // namespace leemodel
