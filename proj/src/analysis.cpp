#include "ringgate/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "parallel.hpp"
#include "ringgate/angles.hpp"
#include "ringgate/closed_form.hpp"

namespace ringgate {
namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double opaque_threshold = 1e-12;

std::optional<double> delta_at(double ka, double x, double gamma) {
  try {
    return transmission({ka, x, gamma}).delta;
  } catch (const DegeneratePointError&) {
    return std::nullopt;
  }
}

/// Bisection on the canonical delta inside [lo, hi]; both ends must lie on the
/// continuous side of the branch cut (|delta| < pi/2) with opposite signs.
std::optional<double> bisect_delta(double gamma, double x, double lo, double hi, double root_tol) {
  auto flo = delta_at(lo, x, gamma);
  auto fhi = delta_at(hi, x, gamma);
  if (!flo || !fhi) return std::nullopt;
  if (std::abs(*flo) >= 0.5 * pi || std::abs(*fhi) >= 0.5 * pi) return std::nullopt;
  if (*flo == 0.0) return lo;
  if (*fhi == 0.0) return hi;
  if ((*flo > 0.0) == (*fhi > 0.0)) return std::nullopt;
  double a = lo, b = hi, fa = *flo, fb = *fhi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    auto fm = delta_at(mid, x, gamma);
    if (!fm) return std::nullopt;
    if (*fm == 0.0) return mid;
    if ((*fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = *fm;
    } else {
      b = mid;
      fb = *fm;
    }
    if (std::min(std::abs(fa), std::abs(fb)) < 1e-3 * root_tol) break;
  }
  const double best = std::abs(fa) <= std::abs(fb) ? a : b;
  if (std::min(std::abs(fa), std::abs(fb)) >= root_tol) return std::nullopt;
  return best;
}

/// Root near `guess` on the level x: widens a symmetric bracket until a usable
/// sign change is found.
std::optional<double> root_near(double gamma, double x, double guess, double root_tol) {
  for (double h = 0.005; h <= 0.16; h *= 2.0) {
    if (guess - h <= 0.0) break;
    const double lo = guess - h, hi = guess + h;
    auto dl = delta_at(lo, x, gamma);
    auto dm = delta_at(guess, x, gamma);
    auto dh = delta_at(hi, x, gamma);
    if (!dl || !dm || !dh) continue;
    // Prefer the half that brackets the root closest to the guess.
    if ((*dl > 0.0) != (*dm > 0.0) && (*dm > 0.0) != (*dh > 0.0)) {
      auto left = bisect_delta(gamma, x, lo, guess, root_tol);
      auto right = bisect_delta(gamma, x, guess, hi, root_tol);
      if (left && right) return (guess - *left) <= (*right - guess) ? left : right;
      if (left) return left;
      if (right) return right;
    } else if ((*dl > 0.0) != (*dm > 0.0)) {
      if (auto r = bisect_delta(gamma, x, lo, guess, root_tol)) return r;
    } else if ((*dm > 0.0) != (*dh > 0.0)) {
      if (auto r = bisect_delta(gamma, x, guess, hi, root_tol)) return r;
    }
  }
  return std::nullopt;
}

CurvePoint make_point(double ka, double x, double gamma) {
  const auto dec = transmission({ka, x, gamma});
  return {ka, x, dec.t_mag, dec.delta};
}

}  // namespace

std::vector<double> linspace(Range r, std::size_t n) {
  if (n < 2) throw InvalidArgument("linspace: need at least 2 points");
  if (!(r.hi > r.lo) || !std::isfinite(r.lo) || !std::isfinite(r.hi))
    throw InvalidArgument("linspace: range must be finite with hi > lo");
  std::vector<double> out(n);
  const double step = (r.hi - r.lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = r.lo + step * static_cast<double>(i);
  out.back() = r.hi;
  return out;
}

const char* to_string(PointFlag f) {
  switch (f) {
    case PointFlag::ok: return "ok";
    case PointFlag::degenerate: return "degenerate";
    case PointFlag::opaque: return "opaque";
  }
  return "ok";
}

ScanGrid scan_grid(double gamma, Range ka, Range x, std::size_t n_ka, std::size_t n_x, unsigned workers) {
  if (!(ka.lo > 0.0)) throw InvalidArgument("scan_grid: ka range must be positive");
  if (!(x.lo >= 0.0)) throw InvalidArgument("scan_grid: x range must be non-negative");
  validate({ka.lo, x.lo, gamma});
  ScanGrid grid;
  grid.gamma = gamma;
  grid.ka_axis = linspace(ka, n_ka);
  grid.x_axis = linspace(x, n_x);
  grid.cells.resize(n_ka * n_x);
  detail::parallel_for(n_ka, workers, [&](std::size_t i) {
    for (std::size_t j = 0; j < n_x; ++j) {
      ScanCell& cell = grid.cells[i * n_x + j];
      try {
        const auto dec = transmission({grid.ka_axis[i], grid.x_axis[j], gamma});
        cell = {dec.t_mag, dec.delta, dec.delta0,
                dec.t_mag < opaque_threshold ? PointFlag::opaque : PointFlag::ok};
      } catch (const DegeneratePointError&) {
        cell = {nan, nan, nan, PointFlag::degenerate};
      }
    }
  });
  return grid;
}

std::vector<double> delta_roots_along_ka(double gamma, double x, Range ka, std::size_t samples,
                                         double root_tol) {
  const auto axis = linspace(ka, samples);
  std::vector<std::optional<double>> d(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) d[i] = delta_at(axis[i], x, gamma);

  std::vector<double> roots;
  // Lift delta into a continuous function between degenerate samples and look
  // for crossings of 2pi*n.
  std::optional<double> lifted_prev;
  for (std::size_t i = 0; i + 1 < axis.size(); ++i) {
    if (!d[i] || !d[i + 1]) {
      lifted_prev.reset();
      continue;
    }
    const double a = lifted_prev.value_or(*d[i]);
    const double b = a + wrap_angle(*d[i + 1] - *d[i]);
    lifted_prev = b;
    if (std::floor(a / two_pi) == std::floor(b / two_pi)) continue;
    if (auto r = bisect_delta(gamma, x, axis[i], axis[i + 1], root_tol)) {
      if (roots.empty() || *r - roots.back() > 1e-12) roots.push_back(*r);
    }
  }
  return roots;
}

double continuation_step_bound(Range x, const CurveOptions& opt) {
  const double dx = (x.hi - x.lo) / static_cast<double>(opt.x_samples - 1);
  return std::hypot(opt.max_link_dka, dx);
}

std::vector<Curve> delta_zero_curves(double gamma, Range ka, Range x, const CurveOptions& opt) {
  validate({ka.lo, x.lo, gamma});
  if (std::abs(gamma - pi) < 1e-12)
    throw InvalidArgument("delta_zero_curves: delta is identically pi at gamma = pi");
  const auto levels = linspace(x, opt.x_samples);
  std::vector<std::vector<double>> roots(levels.size());
  detail::parallel_for(levels.size(), opt.workers, [&](std::size_t l) {
    roots[l] = delta_roots_along_ka(gamma, levels[l], ka, opt.ka_samples, opt.root_tol);
  });

  std::vector<Curve> curves;
  std::vector<std::size_t> active;  // indices into curves, open at the previous level
  for (std::size_t l = 0; l < levels.size(); ++l) {
    struct Candidate {
      double cost;
      std::size_t curve, root;
    };
    std::vector<Candidate> cand;
    for (std::size_t c : active) {
      const auto& pts = curves[c].points;
      const CurvePoint& last = pts.back();
      double predicted = last.ka;
      if (pts.size() >= 2) {
        const CurvePoint& prev = pts[pts.size() - 2];
        predicted += (last.ka - prev.ka) / (last.x - prev.x) * (levels[l] - last.x);
      }
      for (std::size_t r = 0; r < roots[l].size(); ++r) {
        if (std::abs(roots[l][r] - last.ka) < opt.max_link_dka)
          cand.push_back({std::abs(roots[l][r] - predicted), c, r});
      }
    }
    std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
      return a.cost < b.cost || (a.cost == b.cost && (a.curve < b.curve || (a.curve == b.curve && a.root < b.root)));
    });
    std::vector<bool> curve_taken(curves.size(), false), root_taken(roots[l].size(), false);
    std::vector<std::size_t> next_active;
    for (const auto& cd : cand) {
      if (curve_taken[cd.curve] || root_taken[cd.root]) continue;
      curve_taken[cd.curve] = root_taken[cd.root] = true;
      curves[cd.curve].points.push_back(make_point(roots[l][cd.root], levels[l], gamma));
      next_active.push_back(cd.curve);
    }
    for (std::size_t r = 0; r < roots[l].size(); ++r) {
      if (root_taken[r]) continue;
      Curve c;
      c.gamma = gamma;
      c.touches_x_min = (l == 0);
      c.points.push_back(make_point(roots[l][r], levels[l], gamma));
      next_active.push_back(curves.size());
      curves.push_back(std::move(c));
    }
    std::sort(next_active.begin(), next_active.end());
    active = std::move(next_active);
  }
  std::stable_sort(curves.begin(), curves.end(), [](const Curve& a, const Curve& b) {
    const auto& pa = a.points.front();
    const auto& pb = b.points.front();
    return pa.x < pb.x || (pa.x == pb.x && pa.ka < pb.ka);
  });
  return curves;
}

std::vector<CurvePoint> lossless_points(const Curve& curve) {
  std::vector<CurvePoint> out;
  const auto& p = curve.points;
  const double gamma = curve.gamma;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (!(p[i].t_mag >= p[i - 1].t_mag && p[i].t_mag >= p[i + 1].t_mag)) continue;
    const auto guess_ka = [&](double xv) {
      const auto& a = xv <= p[i].x ? p[i - 1] : p[i];
      const auto& b = xv <= p[i].x ? p[i] : p[i + 1];
      return a.ka + (b.ka - a.ka) * (xv - a.x) / (b.x - a.x);
    };
    const auto on_curve = [&](double xv) -> std::optional<double> {
      return root_near(gamma, xv, guess_ka(xv), 1e-3 * on_curve_tol);
    };
    const auto efficiency = [&](double xv) {
      auto k = on_curve(xv);
      if (!k) return -1.0;
      try {
        return transmission({*k, xv, gamma}).t_mag;
      } catch (const DegeneratePointError&) {
        return -1.0;
      }
    };
    const double x_best = golden_maximize(efficiency, p[i - 1].x, p[i + 1].x);
    const auto k_best = on_curve(x_best);
    if (!k_best) continue;
    const CurvePoint cp = make_point(*k_best, x_best, gamma);
    if (std::abs(cp.delta) >= on_curve_tol || 1.0 - cp.t_mag >= lossless_threshold) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const CurvePoint& o) {
      return std::hypot(o.ka - cp.ka, o.x - cp.x) < 1e-6;
    });
    if (!dup) out.push_back(cp);
  }
  return out;
}

std::vector<double> lossless_points_diametric(double x, Range ka, std::size_t samples) {
  validate({ka.lo, x, pi});
  const auto axis = linspace(ka, samples);
  const auto t_of = [&](double k) {
    try {
      return transmission_diametric(k, x).t_mag;
    } catch (const DegeneratePointError&) {
      return -1.0;
    }
  };
  std::vector<double> t(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) t[i] = t_of(axis[i]);
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < axis.size(); ++i) {
    if (!(t[i] >= t[i - 1] && t[i] >= t[i + 1])) continue;
    const double k = golden_maximize(t_of, axis[i - 1], axis[i + 1]);
    if (1.0 - t_of(k) >= lossless_threshold) continue;
    if (out.empty() || k - out.back() > 1e-6) out.push_back(k);
  }
  return out;
}

}  // namespace ringgate
