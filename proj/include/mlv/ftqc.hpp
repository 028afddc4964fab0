#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlv/pauli.hpp"

// Logical-level measurement conversion: conjugating a logical Pauli by the
// global units H-bar^k and S-bar^k turns one measurement into another
// (equivalence is modulo a +-1 sign, which is tracked but not distinguished).

namespace mlv {

enum class LogicalMove { H, S, Sdg };

std::string move_name(LogicalMove m);

struct MeasurementTarget {
  PauliOperator op;  // k logical qubits, hermitian, nonidentity

  static MeasurementTarget from_operator(PauliOperator p);
  /// Parses labels like "Z1 Z2" or "X1 Z3" (1-based qubit indices).
  static MeasurementTarget parse(std::size_t k, const std::string& label);

  std::string label() const;
  /// Same measurement modulo sign: equal (x, z) supports.
  bool same_up_to_sign(const MeasurementTarget& other) const {
    return op.equals_up_to_phase(other.op);
  }
};

/// U P U^dagger for the word of global moves, applied left to right.
/// The sign lands in the returned operator's phase.
MeasurementTarget convert_measurement(const MeasurementTarget& p,
                                      const std::vector<LogicalMove>& word);

/// Shortest word over {H-bar^k, S-bar^k} with convert(source) = target up to
/// sign, by breadth-first search bounded by max_depth.
std::optional<std::vector<LogicalMove>> conversion_chain(const MeasurementTarget& source,
                                                         const MeasurementTarget& target,
                                                         std::size_t max_depth);

/// Groups targets reachable from one another within max_depth moves.
/// Returned classes hold indices into `targets`, each class sorted ascending.
std::vector<std::vector<std::size_t>> ancilla_classes(
    const std::vector<MeasurementTarget>& targets, std::size_t max_depth);

/// Arrow-notation rendering of a conversion, e.g.
/// "Z1 Z2 --[H^k]--> X1 X2 --[S^k]--> Y1 Y2".
std::string render_chain(const MeasurementTarget& source, const std::vector<LogicalMove>& word);

}  // namespace mlv
