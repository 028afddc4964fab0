#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mlv/basis.hpp"
#include "mlv/code.hpp"
#include "mlv/pauli.hpp"
#include "mlv/phase.hpp"

// Concatenated self-dual CSS codes. levels[0] is the innermost code Q_1
// acting on physical qubits; levels[L-1] is the outermost code Q_L.
//
// A level-l qubit carries coordinates (c_1,...,c_L) with c_i in [k_i] for
// i <= l and c_i in [n_i] for i > l; the linear index is row-major with c_1
// fastest, so each inner block is contiguous at level 0. A Q_l block holds
// the qubits varying c_l with all other coordinates fixed.

namespace mlv {

struct ConcatenatedCode {
  std::vector<SelfDualCssCode> levels;
  std::vector<SymplecticBasis> bases;  // all-Matched compatible basis per level

  std::size_t N = 0;
  std::size_t K = 0;
  int distance_lb = 1;  // product of level distances; a lower bound only
  std::vector<std::size_t> level_widths;  // N^(l) for l = 0..L

  // Materialized at the physical level (length-N supports).
  std::vector<BitVector> stabilizers;
  std::vector<BasisPair> logical_pairs;

  std::size_t depth() const { return levels.size(); }
  std::size_t width(std::size_t l) const;
};

/// Builds the concatenated code; every level must pass existence_check.
/// Throws UnsupportedError naming the failing level (1-based) otherwise.
ConcatenatedCode concatenate(const std::vector<SelfDualCssCode>& codes);

/// Same, with caller-supplied bases (used to inject corrupted bases in
/// negative tests). Bases are not verified here.
ConcatenatedCode concatenate_with_bases(const std::vector<SelfDualCssCode>& codes,
                                        std::vector<SymplecticBasis> bases);

/// Per-level extent of each coordinate at level l (size L).
std::vector<std::size_t> level_dims(const ConcatenatedCode& cc, std::size_t l);
std::vector<std::size_t> index_to_coords(const ConcatenatedCode& cc, std::size_t l,
                                         std::size_t idx);
std::size_t coords_to_index(const ConcatenatedCode& cc, std::size_t l,
                            const std::vector<std::size_t>& coords);

/// Expands a level-l operator support one level down by substituting each
/// set bit with the corresponding basis pattern of Q_l (z_side selects the
/// Z-pattern; identical for Matched bases). Overlaps combine mod 2.
BitVector expand_one_level(const ConcatenatedCode& cc, std::size_t l, const BitVector& support,
                           bool z_side);
BitVector expand_to_physical(const ConcatenatedCode& cc, std::size_t l, const BitVector& support,
                             bool z_side);

/// Physical S/S-dagger pattern realizing the given top-level sign pattern,
/// obtained by synthesizing each block's pattern level by level downward.
PhasePattern lift_sign_pattern(const ConcatenatedCode& cc, const PhasePattern& top);

struct MultilevelReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::size_t sign_patterns_checked = 0;

  void fail(std::string msg) {
    pass = false;
    failures.push_back(std::move(msg));
  }
};

/// Conjugation checks at the physical level: per-level basis validity, the
/// all-H swap of every top-level pair (exact phase 0), stabilizer
/// preservation, and `samples` sign patterns realized by lifted S-layers
/// (exhaustive when 2^K <= samples). Reports failures; never throws.
MultilevelReport verify_multilevel(const ConcatenatedCode& cc, std::size_t samples,
                                   uint64_t seed);

/// One gate per level-l qubit; the unit of gate merging.
struct LiftedLayer {
  std::size_t level = 0;
  std::vector<Gate> gates;
};

/// Re-expresses a level-l layer at level l-1. Requires every Q_l block to be
/// uniform: all-I, all-H, or all S/S-dagger (full-block shapes; anything else
/// throws UnsupportedError).
LiftedLayer push_down(const ConcatenatedCode& cc, const LiftedLayer& layer);

/// Reduces a word of single-qubit gates (applied left to right) to a single
/// gate with the same conjugation action modulo global phase, if one exists.
std::optional<Gate> reduce_single_qubit_word(const std::vector<Gate>& word);

struct MergeReport {
  std::size_t achieved_level = 0;  // lowest level the product reaches
  std::vector<std::string> notes;
};

/// Product of lifted layers (applied in list order): brings all factors to
/// the lowest input level, reduces per-qubit gate words, then pushes the
/// result further down while every block stays uniform.
LiftedLayer merge_product(const ConcatenatedCode& cc, const std::vector<LiftedLayer>& gates,
                          MergeReport* report = nullptr);

}  // namespace mlv
