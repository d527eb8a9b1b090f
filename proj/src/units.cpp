#include "ringgate/units.hpp"

#include <cmath>
#include <string>

#include "ringgate/types.hpp"

namespace ringgate::units {
namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0))
    throw InvalidArgument(std::string(name) + " must be finite and > 0");
}

double effective_mass(double mass_ratio) { return mass_ratio * Constants::electron_mass; }

}  // namespace

double spin_orbit_ratio(double alpha_eVm, double radius_m, double mass_ratio) {
  require_positive(radius_m, "radius");
  require_positive(mass_ratio, "mass ratio");
  if (!std::isfinite(alpha_eVm) || alpha_eVm < 0.0)
    throw InvalidArgument("alpha must be finite and >= 0");
  const double alpha_Jm = alpha_eVm * Constants::electron_volt;
  return 2.0 * effective_mass(mass_ratio) * radius_m * alpha_Jm / (Constants::hbar * Constants::hbar);
}

Dimensionless to_dimensionless(const PhysicalRing& p) {
  require_positive(p.radius_m, "radius");
  require_positive(p.mass_ratio, "mass ratio");
  require_positive(p.energy_eV, "energy");
  const double energy_J = p.energy_eV * Constants::electron_volt;
  const double k = std::sqrt(2.0 * effective_mass(p.mass_ratio) * energy_J) / Constants::hbar;
  return {k * p.radius_m, spin_orbit_ratio(p.alpha_eVm, p.radius_m, p.mass_ratio)};
}

double alpha_for_theta(double theta, double radius_m, double mass_ratio) {
  require_positive(radius_m, "radius");
  require_positive(mass_ratio, "mass ratio");
  if (!std::isfinite(theta) || !(std::abs(theta) < 0.5 * pi))
    throw InvalidArgument("|theta| must be < pi/2");
  const double x = -std::tan(theta);
  const double alpha_Jm = x * Constants::hbar * Constants::hbar / (2.0 * effective_mass(mass_ratio) * radius_m);
  return alpha_Jm / Constants::electron_volt;
}

double energy_for_ka(double ka, double radius_m, double mass_ratio) {
  require_positive(ka, "ka");
  require_positive(radius_m, "radius");
  require_positive(mass_ratio, "mass ratio");
  const double k = ka / radius_m;
  return Constants::hbar * Constants::hbar * k * k / (2.0 * effective_mass(mass_ratio)) /
         Constants::electron_volt;
}

}  // namespace ringgate::units
