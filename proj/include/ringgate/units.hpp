#pragma once

namespace ringgate::units {

/// CODATA 2018.
struct Constants {
  static constexpr double hbar = 1.054571817e-34;       // J s
  static constexpr double electron_mass = 9.1093837015e-31;  // kg
  static constexpr double electron_volt = 1.602176634e-19;   // J
};

struct PhysicalRing {
  double radius_m = 0.0;
  double mass_ratio = 0.0;  // m*/m_e
  double alpha_eVm = 0.0;   // Rashba coefficient
  double energy_eV = 0.0;
};

struct Dimensionless {
  double ka = 0.0;
  double x = 0.0;
};

/// ka = a sqrt(2 m* E)/hbar, x = 2 m* a alpha / hbar^2.
Dimensionless to_dimensionless(const PhysicalRing& p);

/// Spin-orbit ratio for a Rashba coefficient alone (energy independent).
double spin_orbit_ratio(double alpha_eVm, double radius_m, double mass_ratio);

/// Rashba coefficient giving tan(theta) = -x. Negative theta (the convention
/// for alpha >= 0) maps to alpha >= 0; positive theta returns a negative alpha
/// (reversed gate field). Throws for |theta| >= pi/2.
double alpha_for_theta(double theta, double radius_m, double mass_ratio);

/// Carrier energy (eV) for a target ka.
double energy_for_ka(double ka, double radius_m, double mass_ratio);

}  // namespace ringgate::units
