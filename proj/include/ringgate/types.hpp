#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ringgate {

using cplx = std::complex<double>;

/// 2x2 complex matrix in the fixed S_z basis (|+>, |->).
using SpinorMatrix = Eigen::Matrix2cd;
using Spinor = Eigen::Vector2cd;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Dimensionless description of a two-terminal ring.
///
/// ka    lead wavenumber times ring radius, > 0
/// x     spin-orbit ratio omega/Omega, >= 0
/// gamma angle between the input and output junctions, in (0, 2pi)
struct RingConfig {
  double ka = 0.0;
  double x = 0.0;
  double gamma = pi;
};

/// Raised for invalid parameters (non-finite, out of range).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a closed-form denominator vanishes (resonance pole).
class DegeneratePointError : public std::runtime_error {
 public:
  DegeneratePointError(const std::string& what, double denominator)
      : std::runtime_error(what), denominator_(denominator) {}
  double denominator() const noexcept { return denominator_; }

 private:
  double denominator_;
};

/// Raised when the matching system is numerically singular.
class SingularSystemError : public std::runtime_error {
 public:
  SingularSystemError(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

/// Raised when an oracle solution violates probability conservation.
class ConservationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws InvalidArgument unless ka > 0, x >= 0, 0 < gamma < 2pi, all finite.
void validate(const RingConfig& cfg);

}  // namespace ringgate
