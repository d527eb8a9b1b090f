#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringgate/types.hpp"

namespace ringgate {

/// |tr(A^dag B)| / sqrt(tr(A^dag A) tr(B^dag B)); 1 iff A and B differ by a
/// complex scalar. Throws InvalidArgument for a zero matrix.
double fidelity_up_to_phase(const SpinorMatrix& a, const SpinorMatrix& b);

enum class Method { closed, oracle };

Method parse_method(std::string_view name);
const char* to_string(Method m);

/// Rings in series. items[0] acts first, so composed = M_{n-1} ... M_1 M_0,
/// with link_phases[i] multiplying between ring i and ring i+1.
struct GateSequence {
  std::vector<RingConfig> items;
  std::vector<cplx> link_phases;
  Method method = Method::closed;
  std::vector<SpinorMatrix> element_matrices;
  std::vector<double> element_efficiency;
  SpinorMatrix composed = SpinorMatrix::Identity();
  double total_efficiency = 1.0;
  std::vector<std::string> warnings;
};

/// Elements whose efficiency is below this are flagged as lossy.
inline constexpr double lossless_tolerance = 1e-6;

/// Per-ring T from the chosen engine, multiplied in order. link_phases may be
/// empty (all 1) or hold items.size() - 1 entries.
GateSequence compose(std::vector<RingConfig> items, Method method = Method::closed,
                     std::vector<cplx> link_phases = {});

/// `first` followed by `second`, joined with a unit link phase.
GateSequence then(const GateSequence& first, const GateSequence& second);

/// Product of matrices where matrices[0] is applied first.
SpinorMatrix ordered_product(std::span<const SpinorMatrix> matrices);

enum class TargetGate { X, Z, H, Phase, Ry };

/// Phase(g) = diag(1, e^{-i g}); Ry(a) = [[cos a/2, -sin a/2], [sin a/2, cos a/2]].
SpinorMatrix target_library(TargetGate gate, double angle = 0.0);

/// "X", "Z", "H", "Phase(<angle>)", "Ry(<angle>)"; angles accept the "pi" suffix.
SpinorMatrix target_library(std::string_view name);

/// Compositions of ideal ring actions (unitary parts only).
namespace recipes {

/// Two gamma = pi/2 phase gates: Phase(pi/2)^2 = Z.
SpinorMatrix z_from_phase_pair();
/// Z then R(pi/4): R(pi/4) Z = H exactly.
SpinorMatrix hadamard();
/// Z then two R(pi/4): R(pi/4) R(pi/4) Z = X exactly (determinant -1).
SpinorMatrix not_gate();
/// R(pi/4) Z R(pi/4); equals Z, not X.
SpinorMatrix sandwich();

}  // namespace recipes

}  // namespace ringgate
