#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlv/gf2.hpp"

namespace mlv {

/// One hyperbolic pair of logical operator supports.
struct BasisPair {
  BitVector x;  // support of the X-type logical operator
  BitVector z;  // support of the Z-type logical operator
  bool operator==(const BasisPair&) const = default;
};

/// A reference basis attached to a catalog code (supports only; structural
/// classification is recomputed on demand).
using ReferenceBasis = std::vector<BasisPair>;

/// Self-dual CSS code: one check matrix H serves as both the X-type and the
/// Z-type parity checks. coset_reps generate D / D^perp where D = ker H.
class SelfDualCssCode {
 public:
  /// Validates self-duality and derives coset representatives when absent.
  /// Rank-deficient H is auto-reduced; `reduced` flags when that happened.
  static SelfDualCssCode from_check_matrix(const BitMatrix& h,
                                           std::optional<BitMatrix> coset_reps = std::nullopt);

  /// The [[2^m-1, 2^m-1-2m, 3]] quantum Hamming code, m >= 3. Column i of H
  /// is the binary expansion of i (1-indexed qubits).
  static SelfDualCssCode hamming_code(int m);

  /// Catalog keys: qhamming15, c422, c622, steane7.
  static SelfDualCssCode builtin(const std::string& name);

  std::size_t n() const { return h_.col_count(); }
  std::size_t k() const { return coset_reps_.row_count(); }
  std::size_t r() const { return h_.row_count(); }

  const BitMatrix& check_matrix() const { return h_; }
  const BitMatrix& coset_reps() const { return coset_reps_; }
  bool was_reduced() const { return reduced_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::optional<ReferenceBasis>& reference_basis() const { return reference_basis_; }
  void set_reference_basis(ReferenceBasis basis) { reference_basis_ = std::move(basis); }
  /// For qhamming15: the gauge-operator basis (crossed-pair structure).
  const std::optional<ReferenceBasis>& gauge_basis() const { return gauge_basis_; }

  /// True iff v is in the stabilizer row space D^perp.
  bool in_stabilizer_span(const BitVector& v) const;
  /// True iff v is a codeword of D = ker H.
  bool in_codeword_space(const BitVector& v) const;

 private:
  SelfDualCssCode() = default;

  BitMatrix h_;
  BitMatrix coset_reps_;
  RrefResult h_red_;   // cached for membership tests
  RrefResult d_red_;   // rref of a basis of D
  bool reduced_ = false;
  std::string name_;
  std::optional<ReferenceBasis> reference_basis_;
  std::optional<ReferenceBasis> gauge_basis_;
};

/// Exact minimum weight over D \ D^perp, which for a self-dual CSS code is
/// the code distance. Enumerates 2^(r+k) codewords; refuses r + k > 24.
int min_distance_bruteforce(const SelfDualCssCode& code);

}  // namespace mlv
