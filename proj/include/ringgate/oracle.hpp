#pragma once

#include <optional>

#include "ringgate/types.hpp"

namespace ringgate {

/// Number of unknowns: r(2), upper-arm a(4), lower-arm b(4), t(2).
inline constexpr int matching_size = 12;

/// Condition numbers above this are reported as singular.
inline constexpr double singular_condition = 1e12;

/// Conservation defects above this are treated as a hard failure.
inline constexpr double conservation_hard_limit = 1e-8;

using MatchingMatrix = Eigen::Matrix<cplx, matching_size, matching_size>;
using MatchingVector = Eigen::Matrix<cplx, matching_size, 1>;
using BasisMixing = Eigen::Matrix4cd;

struct MatchingSystem {
  MatchingMatrix A;
  MatchingVector rhs;
};

/// Transmission/reflection response from boundary matching.
/// Column c is the response to incident spin (c == 0 ? up : down).
struct ScatteringSolution {
  SpinorMatrix Tmat = SpinorMatrix::Zero();
  SpinorMatrix Rmat = SpinorMatrix::Zero();
  double residual = 0.0;
  double conservation_defect = 0.0;
  double condition_estimate = 0.0;
};

/// Builds the junction-matching equations for one incident spinor.
///
/// Rows 0-3 continuity at the input junction (lead I with the upper arm at
/// phi = gamma and with the lower arm at phi' = 2pi - gamma), rows 4-7
/// continuity at the output junction (phi = phi' = 0), rows 8-9 and 10-11
/// vanishing net outward momentum flux at the input and output junctions.
///
/// `mixing`, when given, replaces the four ring eigenstates psi_n by
/// sum_m psi_m M(m, n) in both arms (any invertible recombination within the
/// degenerate energy shell leaves t and r unchanged).
MatchingSystem assemble_system(const RingConfig& cfg, const Spinor& incident,
                               const std::optional<BasisMixing>& mixing = std::nullopt);

/// Solves for both basis incident spinors. Throws SingularSystemError when the
/// condition estimate exceeds singular_condition and ConservationError when the
/// conservation defect exceeds conservation_hard_limit.
ScatteringSolution solve_scattering(const RingConfig& cfg,
                                    const std::optional<BasisMixing>& mixing = std::nullopt);

}  // namespace ringgate
