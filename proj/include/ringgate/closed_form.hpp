#pragma once

#include "ringgate/types.hpp"

namespace ringgate {

/// Below this modulus a transmission denominator is treated as a pole.
inline constexpr double degenerate_denominator_tol = 1e-14;

/// Analytic transmission factorized as T = t_mag e^{i delta0/2} e^{-i gamma/2} U.
///
/// delta is canonical in (-pi, pi]; delta0 is shifted together with delta so
/// that T is unchanged and lies in (-2pi, 2pi] (e^{i delta0/2} needs delta0
/// modulo 4pi). delta_plus/delta_minus are (delta0 +- delta)/2, congruent
/// modulo 2pi to the arguments of the two spin-branch amplitudes.
struct TransmissionDecomposition {
  double t_mag = 0.0;
  double delta_plus = 0.0;
  double delta_minus = 0.0;
  double delta0 = 0.0;
  double delta = 0.0;
  SpinorMatrix U = SpinorMatrix::Identity();
  SpinorMatrix T = SpinorMatrix::Zero();
};

/// The two complex branch amplitudes |T_gamma| e^{i delta_+-} (Aharonov-Casher
/// phases Phi_+ and Phi_-) together with the shared denominator.
struct BranchAmplitudes {
  cplx plus;
  cplx minus;
  cplx denominator;
};

/// Throws DegeneratePointError when |denominator| < degenerate_denominator_tol.
BranchAmplitudes branch_amplitudes(const RingConfig& cfg);

/// Unimodular unitary spin transformation:
///   u11 = (e^{i d/2} cos^2(theta/2) + e^{-i d/2} sin^2(theta/2)) e^{i gamma/2}
///   u12 = i sin(d/2) sin(theta) e^{-i gamma/2},  u21 = -conj(u12),  u22 = conj(u11)
SpinorMatrix unitary_part(double theta, double delta, double gamma);

/// Real rotation [[cos t, -sin t], [sin t, cos t]], i.e. a y rotation by 2t.
SpinorMatrix y_rotation_half_angle(double theta);

TransmissionDecomposition transmission(const RingConfig& cfg);

/// gamma = pi specialization: T = |T_pi| e^{i(delta0+pi)/2} R(theta).
TransmissionDecomposition transmission_diametric(double ka, double x);

/// Independent scalar route to delta: 2 atan2 of the spin-branch numerator
/// Z = sin q(2pi-g) e^{-iwg/2} - sin(qg) e^{iw(2pi-g)/2}, wrapped to (-pi, pi].
double delta_half_angle(const RingConfig& cfg);

/// The arctan formula for delta with full angles w*gamma, w*(2pi-gamma).
/// Kept for comparison; it agrees with the branch-ratio delta only at gamma = pi.
double delta_full_angle_formula(const RingConfig& cfg);

enum class GateKind { Phase, Rotation, Generic };

struct GateLabel {
  GateKind kind = GateKind::Generic;
  /// Phase: relative phase gamma. Rotation: y-rotation angle 2*theta.
  double angle = 0.0;
};

GateLabel classify_gate(const TransmissionDecomposition& dec, const RingConfig& cfg,
                        double tol = 1e-8);

const char* to_string(GateKind kind);

}  // namespace ringgate
