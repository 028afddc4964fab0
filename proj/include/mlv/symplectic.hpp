#pragma once

#include <cstdint>
#include <vector>

#include "mlv/gf2.hpp"

// Small binary symplectic matrices (the phase/Pauli quotient of the Clifford
// group) and BFS closure of a generating set.

namespace mlv {

/// 2k x 2k matrix over GF(2), rows packed into one uint64_t each.
/// Row vector convention (x_1..x_k | z_1..z_k); a Clifford gate acts by
/// right multiplication on the row.
struct SymplecticMatrix {
  int k = 0;  // qubit count; dimension is 2k
  std::vector<uint64_t> rows;

  static SymplecticMatrix identity(int k);
  /// Hadamard on qubit q (0-based): swaps x_q and z_q.
  static SymplecticMatrix hadamard(int k, int q);
  /// Phase gate on qubit q: x_q unchanged, z_q += x_q. S and S† coincide here.
  static SymplecticMatrix phase(int k, int q);
  /// CNOT with control c, target t.
  static SymplecticMatrix cnot(int k, int c, int t);

  int dim() const { return 2 * k; }
  bool get(int r, int c) const { return (rows[r] >> c) & 1u; }

  SymplecticMatrix operator*(const SymplecticMatrix& other) const;
  bool operator==(const SymplecticMatrix& other) const = default;

  bool is_symplectic() const;

  /// Packed key for hashing; valid for dim <= 8 rows of <= 8 bits (k <= 4).
  uint64_t key() const;
};

/// Product of elementwise matrices, convenience for building generators.
SymplecticMatrix symplectic_product(const std::vector<SymplecticMatrix>& factors);

/// Order of the subgroup generated by the given matrices, by BFS over
/// products. Requires k <= 3 and all generators symplectic.
std::size_t symplectic_closure(const std::vector<SymplecticMatrix>& generators);

}  // namespace mlv
