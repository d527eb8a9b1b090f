#include "ringgate/spin_core.hpp"

#include <cmath>

namespace ringgate {

SpectralSet spectral_params(const RingConfig& cfg) {
  validate(cfg);
  SpectralSet s;
  s.w = std::hypot(1.0, cfg.x);
  s.theta = -std::atan(cfg.x);
  s.q = std::hypot(0.5 * cfg.x, cfg.ka);
  for (int j = 1; j <= 2; ++j) {
    const double sign_j = (j % 2 == 0) ? 1.0 : -1.0;
    s.kappa[j - 1][0] = +(0.5 * s.w + sign_j * s.q);
    s.kappa[j - 1][1] = -(0.5 * s.w + sign_j * s.q);
  }
  s.phi_plus = pi * (-1.0 + s.w);
  s.phi_minus = pi * (-1.0 - s.w);
  return s;
}

Spinor eigenspinor(int mu, double x) {
  if (!std::isfinite(x) || x < 0.0) throw InvalidArgument("eigenspinor: x must be >= 0");
  if (mu != 1 && mu != -1) throw InvalidArgument("eigenspinor: mu must be +1 or -1");
  const double half = -0.5 * std::atan(x);
  const double c = std::cos(half);
  const double s = std::sin(half);
  Spinor out;
  if (mu > 0)
    out << c, s;
  else
    out << -s, c;
  return out;
}

Spinor eval_ring_state(const RingEigenstate& st, double phi) {
  const cplx carrier = std::polar(1.0, st.kappa * phi);
  Spinor out;
  out << carrier * std::polar(1.0, -0.5 * phi) * st.u, carrier * std::polar(1.0, 0.5 * phi) * st.v;
  return out;
}

double ring_momentum(const RingEigenstate& st, double w) { return st.kappa - 0.5 * st.mu * w; }

std::array<RingEigenstate, 4> ring_basis(const RingConfig& cfg) {
  const SpectralSet s = spectral_params(cfg);
  std::array<RingEigenstate, 4> basis;
  int n = 0;
  for (int j = 1; j <= 2; ++j) {
    for (int mu : {1, -1}) {
      const Spinor uv = eigenspinor(mu, cfg.x);
      basis[n++] = RingEigenstate{s.kappa_of(j, mu), mu, uv(0), uv(1)};
    }
  }
  return basis;
}

}  // namespace ringgate
