#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Dense GF(2) vectors and matrices, bit-packed into 64-bit limbs.
//
// Bit index 0 of a BitVector corresponds to physical qubit 1; the textual
// rendering writes bit 0 as the first character of the 0/1 string.

namespace mlv {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), limbs_((n + 63) / 64, 0) {}

  /// Parses a 0/1 string; character i becomes bit i.
  static BitVector from_string(const std::string& s);
  /// Builds a vector of length n with the given 1-based support indices set.
  static BitVector from_support(std::size_t n, const std::vector<int>& support_1based);
  static BitVector ones(std::size_t n);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (limbs_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i % 64);
    if (v) {
      limbs_[i / 64] |= mask;
    } else {
      limbs_[i / 64] &= ~mask;
    }
  }

  std::size_t weight() const;
  bool is_zero() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  BitVector operator&(const BitVector& other) const;

  bool operator==(const BitVector& other) const = default;

  std::string to_string() const;
  /// 1-based support indices, ascending.
  std::vector<int> support() const;

  friend int dot_mod2(const BitVector& a, const BitVector& b);

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> limbs_;
};

/// Binary inner product sum_i a_i b_i mod 2.
int dot_mod2(const BitVector& a, const BitVector& b);

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}
  explicit BitMatrix(std::vector<BitVector> rows);

  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix identity(std::size_t n);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitVector>& rows() const { return rows_; }

  void append_row(const BitVector& r);

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix matrix;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Reduced row-echelon form with leftmost-pivot selection. Deterministic;
/// preserves the row space. Zero rows sink to the bottom.
RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// One solution of M v = d with all free variables set to zero.
/// Throws ValidationError if the system is inconsistent.
BitVector solve_linear(const BitMatrix& m, const BitVector& d);

/// Basis of {v : M v = 0}; row count equals cols - rank(M).
BitMatrix nullspace_basis(const BitMatrix& m);

/// True iff v lies in the row space of the (already reduced) rref result.
bool in_rowspace(const RrefResult& reduced, const BitVector& v);
bool in_rowspace(const BitMatrix& m, const BitVector& v);

/// Vectors of rowspace(full) that extend rowspace(sub) to rowspace(full),
/// chosen deterministically by scanning the rref rows of `full`.
/// Throws ValidationError if rowspace(sub) is not contained in rowspace(full).
BitMatrix extend_to_coset_basis(const BitMatrix& sub, const BitMatrix& full);

}  // namespace mlv
