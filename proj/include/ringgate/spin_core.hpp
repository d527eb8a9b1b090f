#pragma once

#include <array>

#include "ringgate/types.hpp"

namespace ringgate {

/// Spectral data of the ring at energy E = hbar*Omega*(ka)^2.
///
/// kappa[j-1][b] holds kappa_j^mu for j in {1, 2} and branch index b
/// (b = 0 for mu = +1, b = 1 for mu = -1):
///   kappa_j^mu = mu * (w/2 + (-1)^j q).
struct SpectralSet {
  double w = 1.0;      // sqrt(1 + x^2)
  double theta = 0.0;  // -atan(x), in (-pi/2, 0]
  double q = 0.0;      // sqrt((x/2)^2 + (ka)^2)
  std::array<std::array<double, 2>, 2> kappa{};
  double phi_plus = 0.0;   // pi(-1 + w)
  double phi_minus = 0.0;  // pi(-1 - w)

  double kappa_of(int j, int mu) const { return kappa[j - 1][mu > 0 ? 0 : 1]; }
};

/// Simultaneous eigenstate of H, K = L_z + S_z and the tilted spin component.
struct RingEigenstate {
  double kappa = 0.0;
  int mu = 1;
  cplx u{1.0, 0.0};
  cplx v{0.0, 0.0};
};

SpectralSet spectral_params(const RingConfig& cfg);

/// Normalized (u, v) with u real and non-negative:
///   mu = +1 -> (cos(theta/2), sin(theta/2))
///   mu = -1 -> (-sin(theta/2), cos(theta/2))
/// which reproduces v/u = (1 - mu*w)/x for x > 0 and is smooth through x = 0.
Spinor eigenspinor(int mu, double x);

/// e^{i kappa phi} (e^{-i phi/2} u, e^{i phi/2} v)
Spinor eval_ring_state(const RingEigenstate& state, double phi);

/// Eigenvalue p of the ring momentum operator (-i d/dphi + (x/2) sigma_r) on a
/// ring eigenstate: p = kappa - mu*w/2, so E/(hbar Omega) = p^2 - x^2/4.
double ring_momentum(const RingEigenstate& state, double w);

/// The four degenerate eigenstates at the configured energy, ordered
/// (j=1, mu=+1), (j=1, mu=-1), (j=2, mu=+1), (j=2, mu=-1).
std::array<RingEigenstate, 4> ring_basis(const RingConfig& cfg);

}  // namespace ringgate
