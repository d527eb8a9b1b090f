#include "doctest.h"
#include "ringgate/analysis.hpp"
#include "ringgate/closed_form.hpp"
#include "ringgate/oracle.hpp"

#include <cmath>
#include <map>

using namespace ringgate;

namespace {

const Range window_ka{19.0, 22.0};
const Range window_x{0.1, 3.5};

const std::vector<Curve>& quarter_curves() {
  static const std::vector<Curve> curves = delta_zero_curves(0.5 * pi, window_ka, window_x);
  return curves;
}

}  // namespace

TEST_CASE("linspace: end points and validation") {
  const auto v = linspace({19.0, 22.0}, 7);
  CHECK(v.front() == 19.0);
  CHECK(v.back() == 22.0);
  CHECK(v[3] == doctest::Approx(20.5));
  CHECK_THROWS_AS(linspace({1.0, 2.0}, 1), InvalidArgument);
  CHECK_THROWS_AS(linspace({2.0, 1.0}, 5), InvalidArgument);
}

TEST_CASE("scan_grid: layout, bounds and the spin-orbit-free column") {
  const auto g = scan_grid(pi, window_ka, {0.0, 3.5}, 61, 36);
  REQUIRE(g.cells.size() == 61 * 36);
  CHECK(g.x_axis.front() == 0.0);
  for (std::size_t i = 0; i < g.ka_axis.size(); ++i) {
    for (std::size_t j = 0; j < g.x_axis.size(); ++j) {
      const auto& c = g.at(i, j);
      if (c.flag == PointFlag::degenerate) continue;
      REQUIRE(c.t_mag <= 1.0 + 1e-12);
      REQUIRE(c.t_mag >= 0.0);
    }
    const double s = std::sin(pi * g.ka_axis[i]);
    const auto& c0 = g.at(i, 0);
    REQUIRE(c0.flag != PointFlag::degenerate);
    REQUIRE(c0.t_mag == doctest::Approx(4.0 / std::sqrt(16.0 + 9.0 * s * s)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(scan_grid(pi, {0.0, 1.0}, {0.0, 1.0}, 5, 5), InvalidArgument);
  CHECK_THROWS_AS(scan_grid(0.0, {1.0, 2.0}, {0.0, 1.0}, 5, 5), InvalidArgument);
}

TEST_CASE("scan_grid: flags for poles and opaque points") {
  const auto g = scan_grid(pi, {1.0, 2.0}, {0.0, std::sqrt(3.0)}, 2, 2);
  CHECK(g.at(0, 0).flag == PointFlag::degenerate);
  CHECK(std::isnan(g.at(0, 0).t_mag));
  CHECK(g.at(1, 1).flag == PointFlag::opaque);
  CHECK(std::string(to_string(PointFlag::opaque)) == "opaque");
}

TEST_CASE("scan_grid: result does not depend on the worker count") {
  const auto a = scan_grid(0.7, window_ka, window_x, 40, 30, 1);
  const auto b = scan_grid(0.7, window_ka, window_x, 40, 30, 7);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    REQUIRE(a.cells[i].t_mag == b.cells[i].t_mag);
    REQUIRE(a.cells[i].delta == b.cells[i].delta);
  }
}

TEST_CASE("delta_roots_along_ka: refined roots") {
  const auto roots = delta_roots_along_ka(0.5 * pi, 1.4662940902702508, window_ka, 601);
  REQUIRE(!roots.empty());
  for (double k : roots) CHECK(std::abs(transmission({k, 1.4662940902702508, 0.5 * pi}).delta) < 1e-10);
  bool near_known = false;
  for (double k : roots) near_known |= std::abs(k - 19.466482493593979) < 1e-6;
  CHECK(near_known);
}

TEST_CASE("delta_zero_curves: curves are phase gates and respect the step bound") {
  const auto& curves = quarter_curves();
  REQUIRE(!curves.empty());
  const double bound = continuation_step_bound(window_x, CurveOptions{});
  for (const auto& c : curves) {
    CHECK(c.gamma == 0.5 * pi);
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const auto& p = c.points[i];
      const RingConfig cfg{p.ka, p.x, c.gamma};
      REQUIRE(std::abs(p.delta) < 1e-10);
      REQUIRE(classify_gate(transmission(cfg), cfg).kind == GateKind::Phase);
      if (i > 0) {
        const auto& q = c.points[i - 1];
        REQUIRE(p.x > q.x);
        REQUIRE(std::hypot(p.ka - q.ka, p.x - q.x) <= bound);
      }
    }
  }
  CHECK_THROWS_AS(delta_zero_curves(pi, window_ka, window_x), InvalidArgument);
}

TEST_CASE("delta_zero_curves: stable under grid refinement") {
  CurveOptions coarse;
  coarse.x_samples = 35;  // every other level of the default 69
  coarse.ka_samples = 301;
  const auto a = delta_zero_curves(0.5 * pi, window_ka, window_x, coarse);
  const auto& b = quarter_curves();
  REQUIRE(!a.empty());
  // Every root on a shared x level must also appear on the finer grid.
  std::multimap<double, double> fine;
  for (const auto& c : b)
    for (const auto& p : c.points) fine.emplace(p.x, p.ka);
  std::size_t matched = 0, total = 0;
  for (const auto& c : a)
    for (const auto& p : c.points) {
      ++total;
      double best = INFINITY;
      for (const auto& [x, ka] : fine)
        if (std::abs(x - p.x) < 1e-12) best = std::min(best, std::abs(ka - p.ka));
      if (best < 1e-6) ++matched;
    }
  CHECK(matched == total);
}

TEST_CASE("delta_zero_curves: deterministic across worker counts") {
  CurveOptions one, many;
  one.workers = 1;
  many.workers = 5;
  const auto a = delta_zero_curves(0.5 * pi, window_ka, window_x, one);
  const auto b = delta_zero_curves(0.5 * pi, window_ka, window_x, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].points.size() == b[i].points.size());
    for (std::size_t j = 0; j < a[i].points.size(); ++j) REQUIRE(a[i].points[j].ka == b[i].points[j].ka);
  }
}

TEST_CASE("lossless_points: unitary phase gates confirmed by the oracle") {
  std::size_t found = 0;
  for (const auto& c : quarter_curves()) {
    for (const auto& p : lossless_points(c)) {
      ++found;
      CHECK(std::abs(p.delta) < on_curve_tol);
      CHECK(1.0 - p.t_mag < lossless_threshold);
      const auto sol = solve_scattering({p.ka, p.x, c.gamma});
      CHECK(std::sqrt(0.5 * sol.Rmat.squaredNorm()) < 1e-3);
    }
  }
  CHECK(found >= 1);
}

TEST_CASE("lossless_points_diametric: x = 1 and the spinless limit") {
  const auto k1 = lossless_points_diametric(1.0, window_ka);
  REQUIRE(!k1.empty());
  bool known = false;
  for (double k : k1) {
    CHECK(1.0 - transmission_diametric(k, 1.0).t_mag < lossless_threshold);
    known |= std::abs(k - 20.240343740038959) < 1e-6;
  }
  CHECK(known);
  // Without spin-orbit coupling the maxima sit at integer ka.
  const auto k0 = lossless_points_diametric(0.0, {19.5, 21.5});
  REQUIRE(k0.size() == 2);
  CHECK(k0[0] == doctest::Approx(20.0).epsilon(1e-6));
  CHECK(k0[1] == doctest::Approx(21.0).epsilon(1e-6));
}

TEST_CASE("golden_maximize") {
  CHECK(golden_maximize([](double v) { return -(v - 0.3) * (v - 0.3); }, -1.0, 2.0) == doctest::Approx(0.3));
}
