#include "ringgate/closed_form.hpp"

#include <cmath>

#include "ringgate/angles.hpp"
#include "ringgate/spin_core.hpp"

namespace ringgate {
namespace {

constexpr cplx I{0.0, 1.0};

// delta near -pi is stored as +pi so gamma = pi gives a single representative.
constexpr double branch_snap = 1e-12;

struct Phases {
  double delta, delta0;
};

Phases canonical_phases(double delta, double delta0) {
  double d = wrap_angle(delta);
  if (d <= -pi + branch_snap) d += two_pi;
  const double shift = d - delta;
  const double d0 = 2.0 * wrap_angle(0.5 * (delta0 + shift));
  return {d, d0};
}

TransmissionDecomposition assemble(double t_mag, double delta, double delta0, double theta,
                                   double gamma) {
  const Phases ph = canonical_phases(delta, delta0);
  TransmissionDecomposition dec;
  dec.t_mag = t_mag;
  dec.delta = ph.delta;
  dec.delta0 = ph.delta0;
  dec.delta_plus = 0.5 * (ph.delta0 + ph.delta);
  dec.delta_minus = 0.5 * (ph.delta0 - ph.delta);
  dec.U = unitary_part(theta, dec.delta, gamma);
  dec.T = t_mag * std::polar(1.0, 0.5 * dec.delta0 - 0.5 * gamma) * dec.U;
  return dec;
}

void check_denominator(cplx denom, const char* where) {
  if (!(std::abs(denom) >= degenerate_denominator_tol))
    throw DegeneratePointError(std::string(where) + ": transmission denominator vanishes",
                               std::abs(denom));
}

}  // namespace

BranchAmplitudes branch_amplitudes(const RingConfig& cfg) {
  const SpectralSet s = spectral_params(cfg);
  const double ka = cfg.ka, q = s.q, g = cfg.gamma;
  const double s_long = std::sin(q * (two_pi - g));
  const double s_short = std::sin(q * g);
  const double phi = s.phi_plus;
  // cos 2q(pi-g) - cos 2q pi and cos Phi - cos 2q pi in product form.
  const double arm_term = 2.0 * s_long * s_short;
  const double flux_term = -2.0 * std::sin(0.5 * phi + pi * q) * std::sin(0.5 * phi - pi * q);
  const cplx denom = ka * ka * arm_term + 4.0 * q * q * flux_term + 4.0 * I * ka * q * std::sin(two_pi * q);
  check_denominator(denom, "transmission");

  const auto branch = [&](double ac_phase) {
    return 4.0 * I * ka * q * (s_long + std::polar(1.0, ac_phase) * s_short) *
           std::polar(1.0, -g * ac_phase / two_pi) / denom;
  };
  return {branch(s.phi_plus), branch(s.phi_minus), denom};
}

SpinorMatrix unitary_part(double theta, double delta, double gamma) {
  const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
  const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
  const cplx u11 = (std::polar(c2, 0.5 * delta) + std::polar(s2, -0.5 * delta)) * std::polar(1.0, 0.5 * gamma);
  const cplx u12 = I * std::sin(0.5 * delta) * std::sin(theta) * std::polar(1.0, -0.5 * gamma);
  SpinorMatrix u;
  u << u11, u12, -std::conj(u12), std::conj(u11);
  return u;
}

SpinorMatrix y_rotation_half_angle(double theta) {
  SpinorMatrix r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

TransmissionDecomposition transmission(const RingConfig& cfg) {
  const BranchAmplitudes b = branch_amplitudes(cfg);
  const double theta = -std::atan(cfg.x);
  const double dp = std::arg(b.plus);
  const double dm = std::arg(b.minus);
  return assemble(std::abs(b.plus), dp - dm, dp + dm, theta, cfg.gamma);
}

TransmissionDecomposition transmission_diametric(double ka, double x) {
  const RingConfig cfg{ka, x, pi};
  const SpectralSet s = spectral_params(cfg);
  const double q = s.q;
  const double sin_pq = std::sin(pi * q);
  const double flux_term = -2.0 * std::sin(0.5 * s.phi_plus + pi * q) * std::sin(0.5 * s.phi_plus - pi * q);
  const cplx denom = 2.0 * ka * ka * sin_pq * sin_pq + 4.0 * q * q * flux_term + 4.0 * I * ka * q * std::sin(two_pi * q);
  check_denominator(denom, "transmission_diametric");
  // Equals |T_pi| e^{i(delta0 + pi)/2}.
  const cplx prefactor = 8.0 * I * ka * q * sin_pq * std::cos(0.5 * s.phi_plus) / denom;
  return assemble(std::abs(prefactor), pi, 2.0 * std::arg(prefactor) - pi, s.theta, pi);
}

double delta_half_angle(const RingConfig& cfg) {
  const SpectralSet s = spectral_params(cfg);
  const double g = cfg.gamma;
  const double s_long = std::sin(s.q * (two_pi - g));
  const double s_short = std::sin(s.q * g);
  const double num = -(std::sin(0.5 * s.w * g) * s_long + std::sin(0.5 * s.w * (two_pi - g)) * s_short);
  const double den = std::cos(0.5 * s.w * g) * s_long - std::cos(0.5 * s.w * (two_pi - g)) * s_short;
  return wrap_angle(2.0 * std::atan2(num, den));
}

double delta_full_angle_formula(const RingConfig& cfg) {
  const SpectralSet s = spectral_params(cfg);
  const double g = cfg.gamma;
  const double s_long = std::sin(s.q * (two_pi - g));
  const double s_short = std::sin(s.q * g);
  const double num = std::sin(s.w * g) * s_long + std::sin(s.w * (two_pi - g)) * s_short;
  const double den = std::cos(s.w * g) * s_long - std::cos(s.w * (two_pi - g)) * s_short;
  return wrap_angle(2.0 * std::atan(num / den));
}

GateLabel classify_gate(const TransmissionDecomposition& dec, const RingConfig& cfg, double tol) {
  if (std::abs(dec.delta) < tol) return {GateKind::Phase, cfg.gamma};
  if (std::abs(cfg.gamma - pi) < tol && angular_distance(dec.delta, pi) < tol)
    return {GateKind::Rotation, -2.0 * std::atan(cfg.x)};
  return {GateKind::Generic, 0.0};
}

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Phase: return "phase";
    case GateKind::Rotation: return "rotation";
    case GateKind::Generic: return "generic";
  }
  return "generic";
}

}  // namespace ringgate
