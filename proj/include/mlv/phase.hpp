#pragma once

#include <string>
#include <vector>

#include "mlv/basis.hpp"
#include "mlv/code.hpp"
#include "mlv/pauli.hpp"

// Transversal S/S-dagger layer synthesis. A pattern entry of +1 encodes S,
// -1 encodes S-dagger; sign convention throughout: a_j = +1 means the logical
// action on pair j is S-bar, i.e. X_j -> +i X_j Z_j.

namespace mlv {

struct PhasePattern {
  std::vector<int> signs;  // entries in {+1, -1}

  static PhasePattern all_plus(std::size_t n) { return {std::vector<int>(n, +1)}; }
  static PhasePattern all_minus(std::size_t n) { return {std::vector<int>(n, -1)}; }

  std::size_t size() const { return signs.size(); }
  bool operator==(const PhasePattern&) const = default;

  TransversalLayer to_layer() const;
  /// Compact rendering, e.g. "++-+".
  std::string to_pm_string() const;
  /// Gate rendering, e.g. "S S S† S".
  std::string to_gate_string() const;

  static PhasePattern from_pm_string(const std::string& s);
};

/// Solves for the layer directly: delta_i = (wt(g_i) mod 4) / 2, solve H v = delta
/// with free variables zero, return c_i = (-1)^{v_i}. The resulting layer
/// maps every g^x to g^x g^z with phase exactly 0.
PhasePattern stabilizer_preserving_layer(const SelfDualCssCode& code);

/// Signs a_j realized on an all-Matched basis by the given n-qubit layer:
/// q_j = wt(l_j) - 2 sum_i v_i l_ji, folded to {-1,+1}. Cross-checked
/// internally against phase-tracked conjugation of each X_j.
PhasePattern logical_phase_signs(const SelfDualCssCode& code, const SymplecticBasis& basis,
                                 const PhasePattern& layer);

/// Physical layer realizing the target logical sign pattern: start from the
/// stabilizer-preserving layer, then flip signs on supp(l_j) (multiplication
/// by the logical Z_j) wherever the realized sign disagrees with the target.
PhasePattern synthesize_phase_layer(const SelfDualCssCode& code, const SymplecticBasis& basis,
                                    const PhasePattern& target);

/// The all-H layer, after verifying it swaps every pair X_j <-> Z_j with
/// phase 0 and preserves the stabilizer group. Throws ValidationError with
/// the verifier's findings otherwise.
TransversalLayer hadamard_layer(const SelfDualCssCode& code, const SymplecticBasis& basis);

}  // namespace mlv
