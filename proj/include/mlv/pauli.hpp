#pragma once

#include <string>
#include <vector>

#include "mlv/gf2.hpp"

// Phase-tracked Pauli operators in canonical form i^phase * X^x Z^z, and
// conjugation by transversal single-qubit Clifford layers or transversal CNOT.

namespace mlv {

enum class Gate { I, X, Y, Z, H, S, Sdg };

char gate_char(Gate g);
std::string gate_name(Gate g);
Gate gate_from_name(const std::string& s);
Gate gate_inverse(Gate g);

struct PauliOperator {
  BitVector x;
  BitVector z;
  int phase = 0;  // exponent of i, mod 4

  PauliOperator() = default;
  PauliOperator(BitVector x_part, BitVector z_part, int p = 0);

  static PauliOperator identity(std::size_t n);
  static PauliOperator x_type(const BitVector& support);
  static PauliOperator z_type(const BitVector& support);
  /// Single Pauli {X,Y,Z} on 0-based qubit `q` of an n-qubit register.
  static PauliOperator single(std::size_t n, std::size_t q, Gate which);

  std::size_t size() const { return x.size(); }
  bool is_identity() const { return x.is_zero() && z.is_zero() && phase == 0; }
  bool is_hermitian() const;

  bool operator==(const PauliOperator& other) const = default;

  /// Same (x, z) support pattern, phase ignored.
  bool equals_up_to_phase(const PauliOperator& other) const {
    return x == other.x && z == other.z;
  }

  /// "+1 XIYZ..." with qubits carrying both X and Z parts rendered as Y
  /// (folding the i per Y into the leading phase token).
  std::string to_string() const;
};

/// Canonical product: phases add, x/z parts xor, with the reordering factor
/// (-1)^(a.z . b.x) from commuting Z^az past X^bx.
PauliOperator pauli_multiply(const PauliOperator& a, const PauliOperator& b);

/// True iff the operators commute: x_a.z_b + z_a.x_b = 0 (mod 2).
bool pauli_commute(const PauliOperator& a, const PauliOperator& b);

struct TransversalLayer {
  std::vector<Gate> gates;

  static TransversalLayer uniform(std::size_t n, Gate g);
  static TransversalLayer all_h(std::size_t n) { return uniform(n, Gate::H); }

  std::size_t size() const { return gates.size(); }
  TransversalLayer inverse() const;
  std::string to_string() const;
};

/// L P L^dagger in canonical form, exact phase included.
PauliOperator conjugate_by_layer(const PauliOperator& p, const TransversalLayer& layer);

/// Conjugation by block-transversal CNOT on a 2n-qubit operator
/// (qubits [0,n) control block, [n,2n) target block).
PauliOperator conjugate_by_transversal_cnot(const PauliOperator& p);

/// Independent validation path: builds the 2^n x 2^n matrices explicitly and
/// re-extracts the canonical form. Refuses n > 7.
PauliOperator dense_oracle_conjugate(const PauliOperator& p, const TransversalLayer& layer);

}  // namespace mlv
