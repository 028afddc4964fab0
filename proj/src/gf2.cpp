#include "mlv/gf2.hpp"

#include <bit>
#include <algorithm>

namespace mlv {

BitVector BitVector::from_string(const std::string& s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      v.set(i, true);
    } else if (s[i] != '0') {
      throw ValidationError("invalid character in bit string: " + s);
    }
  }
  return v;
}

BitVector BitVector::from_support(std::size_t n, const std::vector<int>& support_1based) {
  BitVector v(n);
  for (int q : support_1based) {
    if (q < 1 || static_cast<std::size_t>(q) > n) {
      throw DimensionError("support index out of range");
    }
    v.set(static_cast<std::size_t>(q - 1), true);
  }
  return v;
}

BitVector BitVector::ones(std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, true);
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (uint64_t limb : limbs_) w += std::popcount(limb);
  return w;
}

bool BitVector::is_zero() const {
  for (uint64_t limb : limbs_) {
    if (limb != 0) return false;
  }
  return true;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (n_ != other.n_) throw DimensionError("BitVector xor: length mismatch");
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= other.limbs_[i];
  return *this;
}

BitVector BitVector::operator&(const BitVector& other) const {
  if (n_ != other.n_) throw DimensionError("BitVector and: length mismatch");
  BitVector out(n_);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    out.limbs_[i] = limbs_[i] & other.limbs_[i];
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::vector<int> BitVector::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int dot_mod2(const BitVector& a, const BitVector& b) {
  if (a.n_ != b.n_) throw DimensionError("dot_mod2: length mismatch");
  uint64_t acc = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    acc ^= a.limbs_[i] & b.limbs_[i];
  }
  return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) {
    cols_ = rows_[0].size();
    for (const auto& r : rows_) {
      if (r.size() != cols_) throw DimensionError("BitMatrix: ragged rows");
    }
  }
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVector> out;
  out.reserve(rows.size());
  for (const auto& s : rows) out.push_back(BitVector::from_string(s));
  return BitMatrix(std::move(out));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.row(i).set(i, true);
  return m;
}

void BitMatrix::append_row(const BitVector& r) {
  if (rows_.empty()) {
    cols_ = r.size();
  } else if (r.size() != cols_) {
    throw DimensionError("append_row: column count mismatch");
  }
  rows_.push_back(r);
}

RrefResult rref(const BitMatrix& m) {
  RrefResult out{m, {}};
  auto& rows = out.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.col_count() && pivot_row < m.row_count(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.row_count() && !rows.row(sel).get(col)) ++sel;
    if (sel == m.row_count()) continue;
    std::swap(rows.row(pivot_row), rows.row(sel));
    for (std::size_t r = 0; r < m.row_count(); ++r) {
      if (r != pivot_row && rows.row(r).get(col)) {
        rows.row(r) ^= rows.row(pivot_row);
      }
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

BitVector solve_linear(const BitMatrix& m, const BitVector& d) {
  if (d.size() != m.row_count()) {
    throw DimensionError("solve_linear: right-hand side length mismatch");
  }
  // Reduce the augmented system [M | d].
  BitMatrix aug(m.row_count(), m.col_count() + 1);
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    for (std::size_t c = 0; c < m.col_count(); ++c) {
      aug.row(r).set(c, m.row(r).get(c));
    }
    aug.row(r).set(m.col_count(), d.get(r));
  }
  RrefResult red = rref(aug);
  BitVector v(m.col_count());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    if (red.pivots[r] == m.col_count()) {
      throw ValidationError("solve_linear: inconsistent system");
    }
    // Free variables stay zero, so each pivot variable equals the
    // augmented bit of its row.
    v.set(red.pivots[r], red.matrix.row(r).get(m.col_count()));
  }
  return v;
}

BitMatrix nullspace_basis(const BitMatrix& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.col_count(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;

  BitMatrix basis;
  for (std::size_t free_col = 0; free_col < m.col_count(); ++free_col) {
    if (is_pivot[free_col]) continue;
    BitVector v(m.col_count());
    v.set(free_col, true);
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      if (red.matrix.row(r).get(free_col)) v.set(red.pivots[r], true);
    }
    basis.append_row(v);
  }
  if (basis.row_count() == 0) basis = BitMatrix(0, m.col_count());
  return basis;
}

bool in_rowspace(const RrefResult& reduced, const BitVector& v) {
  BitVector residual = v;
  for (std::size_t r = 0; r < reduced.pivots.size(); ++r) {
    if (residual.get(reduced.pivots[r])) {
      residual ^= reduced.matrix.row(r);
    }
  }
  return residual.is_zero();
}

bool in_rowspace(const BitMatrix& m, const BitVector& v) {
  return in_rowspace(rref(m), v);
}

BitMatrix extend_to_coset_basis(const BitMatrix& sub, const BitMatrix& full) {
  RrefResult sub_red = rref(sub);
  RrefResult full_red = rref(full);
  for (std::size_t r = 0; r < sub_red.pivots.size(); ++r) {
    if (!in_rowspace(full_red, sub_red.matrix.row(r))) {
      throw ValidationError("extend_to_coset_basis: sub not contained in full");
    }
  }
  // Greedily take rref rows of `full` that are independent modulo the
  // accumulated span; leftmost pivots come first, keeping output canonical.
  BitMatrix span = sub;
  RrefResult span_red = sub_red;
  BitMatrix out(0, full.col_count());
  for (std::size_t r = 0; r < full_red.pivots.size(); ++r) {
    const BitVector& cand = full_red.matrix.row(r);
    if (!in_rowspace(span_red, cand)) {
      out.append_row(cand);
      span.append_row(cand);
      span_red = rref(span);
    }
  }
  return out;
}

}  // namespace mlv
