#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "leemodel/errors.hpp"

namespace leemodel {

/// Tolerances for the adaptive Gauss-Kronrod path. rel_tol is what the
/// subdivision aims for; a result whose error estimate exceeds
/// accept_rel_tol is rejected with QuadratureFailure.
struct QuadratureOptions {
  double rel_tol = 1e-10;
  double accept_rel_tol = 1e-8;
  int max_intervals = 4000;
};

template <class T>
struct QuadratureEstimate {
  T value;
  double error;
  double l1;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration on [a, b]: the
/// panel with the largest |K15 - G7| is bisected until the summed estimate
/// is below rel_tol times the result (or the L1 norm under cancellation).
template <class T, class F>
QuadratureEstimate<T> gauss_kronrod_adaptive(const F& f, double a, double b, double rel_tol,
                                             int max_intervals) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using Gauss = boost::math::quadrature::gauss<double, 7>;
  static const auto& x = Kronrod::abscissa();
  static const auto& wk = Kronrod::weights();
  static const auto& wg = Gauss::weights();

  struct Panel {
    double a, b;
    T value;
    double error;
    double l1;
    bool operator<(const Panel& o) const { return error < o.error; }
  };
  auto rule = [&](double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const T f0 = f(c);
    T k = f0 * wk[0];
    T g = f0 * wg[0];
    double l1 = std::abs(f0) * wk[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
      const T fp = f(c + h * x[i]);
      const T fm = f(c - h * x[i]);
      k += (fp + fm) * wk[i];
      l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
      if (i % 2 == 0) g += (fp + fm) * wg[i / 2];
    }
    return Panel{lo, hi, k * h, std::abs(k - g) * h, l1 * h};
  };

  std::priority_queue<Panel> panels;
  Panel first = rule(a, b);
  T total = first.value;
  double error = first.error;
  double l1 = first.l1;
  panels.push(first);
  for (int n = 1; n < max_intervals; ++n) {
    if (error <= rel_tol * std::max(std::abs(total), 1e-3 * l1)) break;
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      panels.push(worst);
      break;
    }
    const Panel left = rule(worst.a, mid);
    const Panel right = rule(mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  T sum{};
  double err = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  return {sum, err, l1};
}

/// Sum of adaptively integrated pieces with a running error budget.
template <class T>
class PiecewiseIntegral {
 public:
  explicit PiecewiseIntegral(const QuadratureOptions& opt) : opt_(opt) {}

  template <class F>
  void add(F&& f, double a, double b) {
    if (!(b > a)) return;
    const auto est = gauss_kronrod_adaptive<T>(f, a, b, opt_.rel_tol, opt_.max_intervals);
    value_ += est.value;
    magnitude_ += est.l1;
    error_ += est.error;
  }

  double error() const noexcept { return error_; }

  /// Throws QuadratureFailure when the accumulated error estimate is above
  /// the acceptance threshold relative to the result scale.
  T result(const char* what) const {
    const double scale = std::max(std::abs(value_), magnitude_ * 1e-3);
    if (!std::isfinite(std::abs(value_)) || error_ > opt_.accept_rel_tol * scale) {
      throw LeeError(ErrorCode::QuadratureFailure,
                     std::string(what) + ": error estimate " + std::to_string(error_) +
                         " exceeds tolerance for value scale " + std::to_string(scale));
    }
    return value_;
  }

 private:
  QuadratureOptions opt_;
  T value_{};
  double magnitude_ = 0.0;
  double error_ = 0.0;
};

}  // namespace leemodel
