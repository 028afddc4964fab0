#include "mlv/phase.hpp"

#include <stdexcept>

namespace mlv {

TransversalLayer PhasePattern::to_layer() const {
  TransversalLayer layer;
  layer.gates.reserve(signs.size());
  for (int s : signs) layer.gates.push_back(s == +1 ? Gate::S : Gate::Sdg);
  return layer;
}

std::string PhasePattern::to_pm_string() const {
  std::string out;
  out.reserve(signs.size());
  for (int s : signs) out.push_back(s == +1 ? '+' : '-');
  return out;
}

std::string PhasePattern::to_gate_string() const {
  std::string out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out.push_back(' ');
    out += gate_name(signs[i] == +1 ? Gate::S : Gate::Sdg);
  }
  return out;
}

PhasePattern PhasePattern::from_pm_string(const std::string& s) {
  PhasePattern out;
  out.signs.reserve(s.size());
  for (char c : s) {
    if (c == '+') {
      out.signs.push_back(+1);
    } else if (c == '-') {
      out.signs.push_back(-1);
    } else {
      throw ValidationError(std::string("phase pattern: unexpected character '") + c + "'");
    }
  }
  return out;
}

PhasePattern stabilizer_preserving_layer(const SelfDualCssCode& code) {
  std::size_t r = code.r();
  BitVector delta(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t w4 = code.check_matrix().row(i).weight() % 4;
    if (w4 % 2 != 0) {
      throw ValidationError("stabilizer_preserving_layer: odd-weight stabilizer row");
    }
    delta.set(i, w4 == 2);
  }
  BitVector v = solve_linear(code.check_matrix(), delta);
  PhasePattern out;
  out.signs.reserve(code.n());
  for (std::size_t i = 0; i < code.n(); ++i) out.signs.push_back(v.get(i) ? -1 : +1);
  return out;
}

PhasePattern logical_phase_signs(const SelfDualCssCode& code, const SymplecticBasis& basis,
                                 const PhasePattern& layer) {
  if (!basis.all_matched()) {
    throw ValidationError("logical_phase_signs: basis has Crossed pairs");
  }
  if (layer.size() != code.n()) {
    throw DimensionError("logical_phase_signs: layer length != n");
  }
  TransversalLayer gates = layer.to_layer();
  PhasePattern out;
  out.signs.reserve(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const BitVector& l = basis.pairs[j].x;
    long q = static_cast<long>(l.weight());
    for (std::size_t i = 0; i < code.n(); ++i) {
      if (layer.signs[i] == -1 && l.get(i)) q -= 2;
    }
    long qt = ((q % 4) + 4 + 2) % 4 - 2;  // fold to {-2,...,1}; odd q gives +/-1
    if (qt != 1 && qt != -1) {
      throw ValidationError("logical_phase_signs: even q_j (pair support has even weight)");
    }
    // The formula must agree with direct phase-tracked conjugation.
    PauliOperator image = conjugate_by_layer(PauliOperator::x_type(l), gates);
    PauliOperator expected =
        pauli_multiply(PauliOperator::x_type(l), PauliOperator::z_type(basis.pairs[j].z));
    expected.phase = (expected.phase + (qt == 1 ? 1 : 3)) % 4;
    if (!(image == expected)) {
      throw ValidationError("logical_phase_signs: formula and conjugation disagree on pair " +
                            std::to_string(j + 1));
    }
    out.signs.push_back(static_cast<int>(qt));
  }
  return out;
}

PhasePattern synthesize_phase_layer(const SelfDualCssCode& code, const SymplecticBasis& basis,
                                    const PhasePattern& target) {
  if (target.size() != basis.size()) {
    throw DimensionError("synthesize_phase_layer: target length != k");
  }
  for (int s : target.signs) {
    if (s != 1 && s != -1) {
      throw ValidationError("synthesize_phase_layer: target entries must be +1 or -1");
    }
  }
  PhasePattern layer = stabilizer_preserving_layer(code);
  PhasePattern realized = logical_phase_signs(code, basis, layer);
  // Disjoint flips: supports of distinct pairs overlap evenly, so flipping
  // supp(l_j) toggles only a_j.
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (realized.signs[j] != target.signs[j]) {
      const BitVector& l = basis.pairs[j].x;
      for (std::size_t i = 0; i < code.n(); ++i) {
        if (l.get(i)) layer.signs[i] = -layer.signs[i];
      }
    }
  }
  if (!(logical_phase_signs(code, basis, layer) == target)) {
    throw ValidationError("synthesize_phase_layer: post-check failed");
  }
  return layer;
}

TransversalLayer hadamard_layer(const SelfDualCssCode& code, const SymplecticBasis& basis) {
  BasisReport report = verify_basis(code, basis, true);
  if (!report.pass) {
    std::string msg = "hadamard_layer: basis is not compatible with the all-H layer";
    for (const auto& f : report.failures) msg += "\n  " + f;
    throw ValidationError(msg);
  }
  return TransversalLayer::all_h(code.n());
}

}  // namespace mlv
