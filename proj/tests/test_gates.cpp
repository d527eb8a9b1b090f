#include "doctest.h"
#include "ringgate/closed_form.hpp"
#include "ringgate/gates.hpp"
#include "support/test_support.hpp"

#include <algorithm>
#include <array>
#include <cmath>

using namespace ringgate;

namespace {

// Points on delta = 0 curves at gamma = pi/2 with 1 - t_mag < 1e-6.
constexpr RingConfig phase_ring_a{19.466482493593979, 1.4662940902702508, 0.5 * pi};
constexpr RingConfig phase_ring_b{20.506618110054216, 1.4662750944497249, 0.5 * pi};
// Diametric ring at x = 1 with maximal |T_pi|; acts as R(-pi/4).
constexpr RingConfig rotation_ring{20.240343740038959, 1.0, pi};

}  // namespace

TEST_CASE("fidelity_up_to_phase: examples") {
  const SpinorMatrix X = target_library(TargetGate::X);
  const SpinorMatrix Z = target_library(TargetGate::Z);
  const SpinorMatrix H = target_library(TargetGate::H);
  CHECK(fidelity_up_to_phase(X, X) == doctest::Approx(1.0));
  CHECK(fidelity_up_to_phase(X, Z) == doctest::Approx(0.0));
  CHECK(fidelity_up_to_phase(H, X) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(fidelity_up_to_phase(3.0 * X, X) == doctest::Approx(1.0));
  CHECK_THROWS_AS(fidelity_up_to_phase(SpinorMatrix::Zero(), X), InvalidArgument);
  CHECK_THROWS_AS(fidelity_up_to_phase(X, SpinorMatrix::Zero()), InvalidArgument);
}

TEST_CASE("fidelity_up_to_phase: global phase and scale invariance") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ph(-pi, pi), sc(0.1, 10.0);
  for (int n = 0; n < 1000; ++n) {
    const SpinorMatrix a = test::random_matrix(rng);
    const SpinorMatrix b = test::random_matrix(rng);
    const double f = fidelity_up_to_phase(a, b);
    REQUIRE(f >= 0.0);
    REQUIRE(f <= 1.0);
    const cplx z = sc(rng) * std::polar(1.0, ph(rng));
    REQUIRE(std::abs(fidelity_up_to_phase(z * a, b) - f) < 1e-12);
    REQUIRE(fidelity_up_to_phase(z * a, a) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("recipes: ideal compositions") {
  const SpinorMatrix X = target_library(TargetGate::X);
  const SpinorMatrix Z = target_library(TargetGate::Z);
  const SpinorMatrix H = target_library(TargetGate::H);
  CHECK((recipes::z_from_phase_pair() - target_library(TargetGate::Phase, pi)).norm() < 1e-15);
  CHECK(fidelity_up_to_phase(recipes::z_from_phase_pair(), Z) > 1.0 - 1e-15);
  CHECK((recipes::hadamard() - H).norm() < 1e-15);
  CHECK((recipes::not_gate() - X).norm() < 1e-15);
  CHECK((recipes::sandwich() - Z).norm() < 1e-15);
  CHECK(fidelity_up_to_phase(recipes::sandwich(), X) < 1e-15);
}

TEST_CASE("recipes: only the rotations-after-Z orderings of {R, R, Z} give X") {
  const SpinorMatrix R = y_rotation_half_angle(0.25 * pi);
  const SpinorMatrix Z = target_library(TargetGate::Z);
  const SpinorMatrix X = target_library(TargetGate::X);
  // Applied first to last.
  const std::array<std::array<SpinorMatrix, 3>, 3> orders{{{Z, R, R}, {R, Z, R}, {R, R, Z}}};
  const std::array<double, 3> expected{1.0, 0.0, 1.0};
  for (std::size_t i = 0; i < orders.size(); ++i) {
    CAPTURE(i);
    CHECK(fidelity_up_to_phase(ordered_product(orders[i]), X) == doctest::Approx(expected[i]).epsilon(1e-14));
  }
}

TEST_CASE("target_library: names and angles") {
  CHECK((target_library("X") - target_library(TargetGate::X)).norm() == 0.0);
  CHECK((target_library("Phase(0.5pi)") - target_library(TargetGate::Phase, 0.5 * pi)).norm() < 1e-15);
  CHECK((target_library("Phase(pi)") - target_library(TargetGate::Z)).norm() < 1e-15);
  CHECK((target_library("Ry(0.5pi)") - y_rotation_half_angle(0.25 * pi)).norm() < 1e-15);
  CHECK((target_library("Ry(-1.5)") - y_rotation_half_angle(-0.75)).norm() < 1e-15);
  CHECK_THROWS_AS(target_library("CNOT"), InvalidArgument);
  CHECK_THROWS_AS(target_library("Phase()"), InvalidArgument);
  CHECK_THROWS_AS(target_library("Ry(abc)"), InvalidArgument);
  for (auto g : {TargetGate::X, TargetGate::Z, TargetGate::H}) {
    const SpinorMatrix m = target_library(g);
    CHECK((m.adjoint() * m - SpinorMatrix::Identity()).norm() < 1e-15);
  }
}

TEST_CASE("compose: two lossless quarter-phase rings act as Z") {
  for (Method method : {Method::closed, Method::oracle}) {
    CAPTURE(to_string(method));
    const auto seq = compose({phase_ring_a, phase_ring_b}, method);
    CHECK(seq.warnings.empty());
    CHECK(seq.total_efficiency > 1.0 - 1e-6);
    CHECK(fidelity_up_to_phase(seq.composed, target_library(TargetGate::Z)) > 1.0 - 1e-9);
  }
}

TEST_CASE("compose: physical Hadamard and NOT chains") {
  // The physical rotation ring realizes R(-pi/4), so the rotation acts before
  // Z: Z R(-pi/4) = H, while R(-pi/4) Z is orthogonal to H. R(-pi/4)^2 Z = -X.
  const auto h = compose({rotation_ring, phase_ring_a, phase_ring_b});
  CHECK(fidelity_up_to_phase(compose({phase_ring_a, phase_ring_b, rotation_ring}).composed,
                             target_library(TargetGate::H)) < 1e-9);
  CHECK(fidelity_up_to_phase(h.composed, target_library(TargetGate::H)) > 1.0 - 1e-9);
  const auto x = compose({phase_ring_a, phase_ring_b, rotation_ring, rotation_ring});
  CHECK(fidelity_up_to_phase(x.composed, target_library(TargetGate::X)) > 1.0 - 1e-9);
  CHECK(x.total_efficiency > 1.0 - 4e-6);
}

TEST_CASE("compose: lossy rings raise warnings, bad link phases are rejected") {
  const auto seq = compose({RingConfig{20.4, 1.0, 1.0}, phase_ring_a});
  REQUIRE(seq.warnings.size() == 1);
  CHECK(seq.warnings[0].find("item 0") != std::string::npos);
  CHECK(seq.total_efficiency < 1.0 - 1e-6);
  CHECK_THROWS_AS(compose({phase_ring_a, phase_ring_b}, Method::closed, {1.0, 1.0}), InvalidArgument);
  CHECK(parse_method("oracle") == Method::oracle);
  CHECK_THROWS_AS(parse_method("exact"), InvalidArgument);
}

TEST_CASE("compose: ordering, link phases and associativity") {
  test::ConfigSampler sample(42, 5.0, 30.0);
  for (int n = 0; n < 100; ++n) {
    const RingConfig a = sample(), b = sample(), c = sample();
    const cplx l1 = std::polar(1.0, 0.3 * n), l2 = std::polar(1.0, -0.2 * n);
    const auto abc = compose({a, b, c}, Method::closed, {l1, l2});
    const SpinorMatrix Ta = transmission(a).T, Tb = transmission(b).T, Tc = transmission(c).T;
    REQUIRE((abc.composed - Tc * l2 * Tb * l1 * Ta).cwiseAbs().maxCoeff() < 1e-13);

    const auto left = then(compose({a, b}), compose({c}));
    const auto right = then(compose({a}), compose({b, c}));
    REQUIRE((left.composed - right.composed).cwiseAbs().maxCoeff() < 1e-13);
    REQUIRE(left.items.size() == 3);
    REQUIRE(left.link_phases.size() == 2);
    REQUIRE(left.total_efficiency == doctest::Approx(right.total_efficiency));
  }
}

TEST_CASE("compose: sequences of lossless rings stay unitary up to efficiency") {
  const std::array<RingConfig, 3> pool{phase_ring_a, phase_ring_b, rotation_ring};
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> pick(0, 2), len(1, 8);
  for (int n = 0; n < 200; ++n) {
    std::vector<RingConfig> items(len(rng));
    std::generate(items.begin(), items.end(), [&] { return pool[pick(rng)]; });
    const auto seq = compose(items);
    const SpinorMatrix u = seq.composed / seq.total_efficiency;
    REQUIRE((u.adjoint() * u - SpinorMatrix::Identity()).norm() < 1e-5);
  }
}
