#include "ringgate/oracle.hpp"

#include <array>
#include <cmath>

#include "ringgate/spin_core.hpp"

namespace ringgate {
namespace {

constexpr int col_r = 0;
constexpr int col_a = 2;
constexpr int col_b = 6;
constexpr int col_t = 10;

// Ring wavefunctions and their momentum images at the three matching angles,
// one column per basis state.
struct ArmValues {
  Eigen::Matrix<cplx, 2, 4> psi;
  Eigen::Matrix<cplx, 2, 4> p_psi;
};

ArmValues arm_values(const std::array<RingEigenstate, 4>& basis, double w, double phi,
                     const std::optional<BasisMixing>& mixing) {
  ArmValues out;
  for (int n = 0; n < 4; ++n) {
    out.psi.col(n) = eval_ring_state(basis[n], phi);
    out.p_psi.col(n) = ring_momentum(basis[n], w) * out.psi.col(n);
  }
  if (mixing) {
    out.psi = out.psi * (*mixing);
    out.p_psi = out.p_psi * (*mixing);
  }
  return out;
}

MatchingMatrix build_matrix(const RingConfig& cfg, const std::optional<BasisMixing>& mixing) {
  const auto basis = ring_basis(cfg);
  const double w = std::hypot(1.0, cfg.x);
  const double ka = cfg.ka;
  const ArmValues upper_in = arm_values(basis, w, cfg.gamma, mixing);
  const ArmValues lower_in = arm_values(basis, w, cfg.gamma - two_pi, mixing);
  const ArmValues at_out = arm_values(basis, w, 0.0, mixing);

  MatchingMatrix A = MatchingMatrix::Zero();
  for (int c = 0; c < 2; ++c) {
    // input junction: f + r = Psi_u(gamma) = Psi_l(2pi - gamma)
    A(0 + c, col_r + c) = 1.0;
    A(0 + c, Eigen::seqN(col_a, 4)) = -upper_in.psi.row(c);
    A(2 + c, col_r + c) = 1.0;
    A(2 + c, Eigen::seqN(col_b, 4)) = -lower_in.psi.row(c);
    // output junction: t = Psi_u(0) = Psi_l(0)
    A(4 + c, col_t + c) = 1.0;
    A(4 + c, Eigen::seqN(col_a, 4)) = -at_out.psi.row(c);
    A(6 + c, col_t + c) = 1.0;
    A(6 + c, Eigen::seqN(col_b, 4)) = -at_out.psi.row(c);
    // Outward momenta sum to zero. Input junction: lead I points along -x,
    // the upper arm along -phi, the lower arm along +phi.
    A(8 + c, col_r + c) = ka;
    A(8 + c, Eigen::seqN(col_a, 4)) = -upper_in.p_psi.row(c);
    A(8 + c, Eigen::seqN(col_b, 4)) = lower_in.p_psi.row(c);
    // Output junction: lead II along +x', upper arm along +phi, lower along -phi.
    A(10 + c, col_t + c) = ka;
    A(10 + c, Eigen::seqN(col_a, 4)) = at_out.p_psi.row(c);
    A(10 + c, Eigen::seqN(col_b, 4)) = -at_out.p_psi.row(c);
  }
  return A;
}

MatchingVector build_rhs(double ka, const Spinor& incident) {
  MatchingVector rhs = MatchingVector::Zero();
  for (int c = 0; c < 2; ++c) {
    rhs(0 + c) = -incident(c);
    rhs(2 + c) = -incident(c);
    rhs(8 + c) = ka * incident(c);
  }
  return rhs;
}

}  // namespace

MatchingSystem assemble_system(const RingConfig& cfg, const Spinor& incident,
                               const std::optional<BasisMixing>& mixing) {
  validate(cfg);
  return {build_matrix(cfg, mixing), build_rhs(cfg.ka, incident)};
}

ScatteringSolution solve_scattering(const RingConfig& cfg, const std::optional<BasisMixing>& mixing) {
  validate(cfg);
  const MatchingMatrix A = build_matrix(cfg, mixing);
  const Eigen::PartialPivLU<MatchingMatrix> lu(A);
  const double rcond = lu.rcond();
  const double condition = rcond > 0.0 ? 1.0 / rcond : INFINITY;
  if (!(condition <= singular_condition))
    throw SingularSystemError("matching system is singular (condition estimate " +
                                  std::to_string(condition) + ")",
                              condition);

  ScatteringSolution sol;
  sol.condition_estimate = condition;
  for (int c = 0; c < 2; ++c) {
    const MatchingVector rhs = build_rhs(cfg.ka, Spinor::Unit(c));
    const MatchingVector x = lu.solve(rhs);
    sol.residual = std::max(sol.residual, (A * x - rhs).norm());
    sol.Rmat.col(c) = x.segment<2>(col_r);
    sol.Tmat.col(c) = x.segment<2>(col_t);
    const double flux = sol.Tmat.col(c).squaredNorm() + sol.Rmat.col(c).squaredNorm();
    sol.conservation_defect = std::max(sol.conservation_defect, std::abs(1.0 - flux));
  }
  if (!(sol.conservation_defect <= conservation_hard_limit))
    throw ConservationError("oracle violates probability conservation (defect " +
                            std::to_string(sol.conservation_defect) + ")");
  return sol;
}

}  // namespace ringgate
