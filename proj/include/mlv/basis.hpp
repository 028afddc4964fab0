#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlv/code.hpp"
#include "mlv/gf2.hpp"

namespace mlv {

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classification of a hyperbolic pair: Matched pairs share X/Z support,
/// Crossed pairs swap supports with a partner pair.
struct PairClass {
  bool matched = true;
  std::size_t partner = 0;  // 0-based partner index, valid when !matched
};

struct SymplecticBasis {
  std::vector<BasisPair> pairs;
  std::vector<PairClass> structure;

  std::size_t size() const { return pairs.size(); }
  bool all_matched() const;
};

struct ExistenceVerdict {
  bool exists = false;
  std::optional<BitVector> witness;  // odd self-inner-product codeword
};

/// Scans the coset representatives for one with h.h = 1. Complete: if no
/// representative has odd self-inner-product, no codeword of D does.
ExistenceVerdict existence_check(const SelfDualCssCode& code);

/// Symplectic Gram-Schmidt tailored to self-dual CSS codes. Emits Matched
/// pairs while some w_p has w_p.w_p = 1 and Crossed pairs otherwise, with
/// smallest-index selection throughout.
SymplecticBasis symplectic_gram_schmidt(const std::vector<BitVector>& reps);

/// Rewrites one Matched pair `a` and one Crossed pair (b, c) into three
/// Matched pairs spanning the same quotient.
SymplecticBasis merge_triple(const SymplecticBasis& basis, std::size_t a,
                             std::size_t b, std::size_t c);

/// Full pipeline: move an odd-weight witness to the front, run Gram-Schmidt,
/// then merge triples (lowest Matched with lowest Crossed pair) until every
/// pair is Matched. Throws UnsupportedError when no witness exists.
SymplecticBasis build_compatible_basis(const SelfDualCssCode& code);

struct BasisReport {
  bool pass = true;
  std::vector<std::string> failures;
  /// For require_matched runs: pairs (j, j') (1-based) where all-H mapped
  /// X_j onto Z_j' with j != j'.
  std::vector<std::pair<int, int>> crossed_swaps;

  void fail(std::string msg) {
    pass = false;
    failures.push_back(std::move(msg));
  }
};

/// Checks all symplectic-basis invariants against the code. With
/// require_matched, additionally conjugates every pair by the all-H layer
/// (exact phases) and checks that stabilizer rows map inside the stabilizer
/// group. Returns a report; never throws on mere invalidity.
BasisReport verify_basis(const SelfDualCssCode& code, const SymplecticBasis& basis,
                         bool require_matched);

/// Recomputes the Matched/Crossed structure of raw support pairs (used when
/// loading a reference basis that carries no classification).
SymplecticBasis classify_pairs(const std::vector<BasisPair>& pairs);

}  // namespace mlv
