#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ringgate/types.hpp"

namespace ringgate {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// `n` evenly spaced points with exact end points; n >= 2.
std::vector<double> linspace(Range r, std::size_t n);

enum class PointFlag : unsigned char {
  ok = 0,
  degenerate = 1,  // denominator pole; values are NaN
  opaque = 2,      // t_mag below 1e-12, phases meaningless
};

const char* to_string(PointFlag f);

struct ScanCell {
  double t_mag = 0.0;
  double delta = 0.0;
  double delta0 = 0.0;
  PointFlag flag = PointFlag::ok;
};

/// Closed-form evaluation on a (ka, x) lattice at fixed gamma.
/// cells are ka-major: cells[i_ka * x_axis.size() + i_x].
struct ScanGrid {
  std::vector<double> ka_axis;
  std::vector<double> x_axis;
  double gamma = pi;
  std::vector<ScanCell> cells;

  const ScanCell& at(std::size_t i_ka, std::size_t i_x) const {
    return cells[i_ka * x_axis.size() + i_x];
  }
};

/// workers == 0 picks std::thread::hardware_concurrency(). Results do not
/// depend on the worker count.
ScanGrid scan_grid(double gamma, Range ka, Range x, std::size_t n_ka, std::size_t n_x,
                   unsigned workers = 0);

struct CurvePoint {
  double ka = 0.0;
  double x = 0.0;
  double t_mag = 0.0;
  double delta = 0.0;
};

/// Polyline along which delta(ka, x) = 0 at fixed gamma, ordered by x.
struct Curve {
  double gamma = 0.0;
  std::vector<CurvePoint> points;
  /// The curve reaches the lower x boundary of the search window; it is not
  /// extrapolated toward x = 0 where delta is ill-conditioned.
  bool touches_x_min = false;
};

struct CurveOptions {
  std::size_t ka_samples = 601;
  std::size_t x_samples = 69;
  /// Refined roots satisfy |delta| < root_tol.
  double root_tol = 1e-10;
  /// Largest |delta ka| allowed when linking roots on neighbouring x levels.
  double max_link_dka = 0.25;
  unsigned workers = 0;
};

/// Euclidean bound on the distance between consecutive curve points.
double continuation_step_bound(Range x, const CurveOptions& opt);

/// Roots of delta along ka at fixed (x, gamma), refined by bisection.
std::vector<double> delta_roots_along_ka(double gamma, double x, Range ka, std::size_t samples,
                                         double root_tol = 1e-10);

/// Traces delta = 0 curves: roots are found on each x level of a coarse grid
/// (sign changes of the unwrapped delta along ka, refined by bisection) and
/// linked between neighbouring levels. Requires gamma != pi. An empty result
/// is valid.
std::vector<Curve> delta_zero_curves(double gamma, Range ka, Range x, const CurveOptions& opt = {});

/// Lossless points must have 1 - t_mag below this.
inline constexpr double lossless_threshold = 1e-6;
/// Points returned by lossless_points satisfy |delta| below this.
inline constexpr double on_curve_tol = 1e-8;

/// Local maxima of t_mag along the curve, refined along the curve with x as the
/// curve parameter; keeps those with 1 - t_mag < lossless_threshold.
std::vector<CurvePoint> lossless_points(const Curve& curve);

/// Maxima of |T_pi|(ka) at fixed x, refined; keeps 1 - t_mag < lossless_threshold.
std::vector<double> lossless_points_diametric(double x, Range ka, std::size_t samples = 3001);

/// Golden-section maximization of f on [lo, hi]; returns the arg max.
template <typename F>
double golden_maximize(F&& f, double lo, double hi, int iterations = 200) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations && (b - a) > 4e-16 * std::max(1.0, std::abs(a)); ++i) {
    if (fc >= fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a); fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

}  // namespace ringgate
