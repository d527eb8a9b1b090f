#include "ringgate/gates.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "ringgate/angles.hpp"
#include "ringgate/closed_form.hpp"
#include "ringgate/oracle.hpp"

namespace ringgate {

double fidelity_up_to_phase(const SpinorMatrix& a, const SpinorMatrix& b) {
  const double na = a.squaredNorm();
  const double nb = b.squaredNorm();
  if (!(na > 0.0) || !(nb > 0.0)) throw InvalidArgument("fidelity_up_to_phase: zero matrix");
  const double f = std::abs((a.adjoint() * b).trace()) / std::sqrt(na * nb);
  return std::min(f, 1.0);
}

Method parse_method(std::string_view name) {
  if (name == "closed") return Method::closed;
  if (name == "oracle") return Method::oracle;
  throw InvalidArgument("unknown method '" + std::string(name) + "' (closed|oracle)");
}

const char* to_string(Method m) { return m == Method::closed ? "closed" : "oracle"; }

SpinorMatrix ordered_product(std::span<const SpinorMatrix> matrices) {
  SpinorMatrix out = SpinorMatrix::Identity();
  for (const auto& m : matrices) out = m * out;
  return out;
}

namespace {

void accumulate(GateSequence& seq) {
  seq.composed = SpinorMatrix::Identity();
  seq.total_efficiency = 1.0;
  for (std::size_t i = 0; i < seq.element_matrices.size(); ++i) {
    if (i > 0) seq.composed *= seq.link_phases.empty() ? cplx{1.0} : seq.link_phases[i - 1];
    seq.composed = seq.element_matrices[i] * seq.composed;
    seq.total_efficiency *= seq.element_efficiency[i];
  }
}

}  // namespace

GateSequence compose(std::vector<RingConfig> items, Method method, std::vector<cplx> link_phases) {
  if (!link_phases.empty() && link_phases.size() + 1 != items.size())
    throw InvalidArgument("compose: need items.size() - 1 link phases");
  GateSequence seq;
  seq.items = std::move(items);
  seq.link_phases = std::move(link_phases);
  seq.method = method;
  for (std::size_t i = 0; i < seq.items.size(); ++i) {
    const RingConfig& cfg = seq.items[i];
    SpinorMatrix t;
    double eff;
    if (method == Method::closed) {
      const auto dec = transmission(cfg);
      t = dec.T;
      eff = dec.t_mag;
    } else {
      t = solve_scattering(cfg).Tmat;
      eff = std::sqrt(0.5 * t.squaredNorm());
    }
    if (eff < 1.0 - lossless_tolerance) {
      std::ostringstream msg;
      msg.precision(9);
      msg << "item " << i << " is lossy (efficiency " << eff << ")";
      seq.warnings.push_back(msg.str());
    }
    seq.element_matrices.push_back(t);
    seq.element_efficiency.push_back(std::min(eff, 1.0));
  }
  accumulate(seq);
  return seq;
}

GateSequence then(const GateSequence& first, const GateSequence& second) {
  GateSequence out = first;
  const auto phases_of = [](const GateSequence& s) {
    return s.link_phases.empty() && s.items.size() > 1
               ? std::vector<cplx>(s.items.size() - 1, cplx{1.0})
               : s.link_phases;
  };
  auto lp = phases_of(first);
  if (!first.items.empty() && !second.items.empty()) lp.push_back(1.0);
  const auto lp2 = phases_of(second);
  lp.insert(lp.end(), lp2.begin(), lp2.end());
  out.link_phases = std::move(lp);
  out.items.insert(out.items.end(), second.items.begin(), second.items.end());
  out.element_matrices.insert(out.element_matrices.end(), second.element_matrices.begin(),
                              second.element_matrices.end());
  out.element_efficiency.insert(out.element_efficiency.end(), second.element_efficiency.begin(),
                                second.element_efficiency.end());
  out.warnings.insert(out.warnings.end(), second.warnings.begin(), second.warnings.end());
  accumulate(out);
  return out;
}

SpinorMatrix target_library(TargetGate gate, double angle) {
  SpinorMatrix m;
  const double r = 1.0 / std::sqrt(2.0);
  switch (gate) {
    case TargetGate::X: m << 0, 1, 1, 0; break;
    case TargetGate::Z: m << 1, 0, 0, -1; break;
    case TargetGate::H: m << r, r, r, -r; break;
    case TargetGate::Phase: m << 1, 0, 0, std::polar(1.0, -angle); break;
    case TargetGate::Ry:
      m << std::cos(0.5 * angle), -std::sin(0.5 * angle), std::sin(0.5 * angle), std::cos(0.5 * angle);
      break;
  }
  return m;
}

SpinorMatrix target_library(std::string_view name) {
  if (name == "X") return target_library(TargetGate::X);
  if (name == "Z") return target_library(TargetGate::Z);
  if (name == "H") return target_library(TargetGate::H);
  const auto with_arg = [&](std::string_view prefix) -> std::optional<double> {
    if (name.size() > prefix.size() + 2 && name.substr(0, prefix.size()) == prefix &&
        name[prefix.size()] == '(' && name.back() == ')')
      return parse_angle(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    return std::nullopt;
  };
  if (auto a = with_arg("Phase")) return target_library(TargetGate::Phase, *a);
  if (auto a = with_arg("Ry")) return target_library(TargetGate::Ry, *a);
  throw InvalidArgument("unknown target gate '" + std::string(name) + "'");
}

namespace recipes {

namespace {
SpinorMatrix quarter_phase() { return target_library(TargetGate::Phase, 0.5 * pi); }
SpinorMatrix quarter_rotation() { return y_rotation_half_angle(0.25 * pi); }
}  // namespace

SpinorMatrix z_from_phase_pair() {
  const SpinorMatrix seq[] = {quarter_phase(), quarter_phase()};
  return ordered_product(seq);
}

SpinorMatrix hadamard() {
  const SpinorMatrix seq[] = {z_from_phase_pair(), quarter_rotation()};
  return ordered_product(seq);
}

SpinorMatrix not_gate() {
  const SpinorMatrix seq[] = {quarter_phase(), quarter_phase(), quarter_rotation(), quarter_rotation()};
  return ordered_product(seq);
}

SpinorMatrix sandwich() {
  const SpinorMatrix seq[] = {quarter_rotation(), z_from_phase_pair(), quarter_rotation()};
  return ordered_product(seq);
}

}  // namespace recipes

}  // namespace ringgate
