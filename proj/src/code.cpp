#include "mlv/code.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace mlv {

SelfDualCssCode SelfDualCssCode::from_check_matrix(const BitMatrix& h,
                                                   std::optional<BitMatrix> coset_reps) {
  if (h.row_count() == 0 || h.col_count() == 0) {
    throw ValidationError("from_check_matrix: empty check matrix");
  }
  SelfDualCssCode code;
  code.h_ = h;
  RrefResult red = rref(h);
  if (red.pivots.size() < h.row_count()) {
    // Overcomplete generator lists are common in the literature; keep the
    // independent rows and flag the reduction.
    BitMatrix reduced_h(0, h.col_count());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      reduced_h.append_row(red.matrix.row(i));
    }
    code.h_ = reduced_h;
    code.reduced_ = true;
  }
  for (std::size_t i = 0; i < code.h_.row_count(); ++i) {
    for (std::size_t j = i; j < code.h_.row_count(); ++j) {
      if (dot_mod2(code.h_.row(i), code.h_.row(j)) != 0) {
        throw ValidationError("from_check_matrix: check rows are not mutually orthogonal "
                              "(code is not self-dual CSS)");
      }
    }
  }

  BitMatrix codeword_basis = nullspace_basis(code.h_);
  std::size_t r = code.h_.row_count();
  std::size_t n = code.h_.col_count();
  if (n < 2 * r + 1) {
    throw ValidationError("from_check_matrix: code has k = 0 logical qubits");
  }
  if (coset_reps.has_value()) {
    std::size_t k = n - 2 * r;
    if (coset_reps->row_count() != k) {
      throw ValidationError("from_check_matrix: expected " + std::to_string(k) +
                            " coset representatives");
    }
    RrefResult d_red = rref(codeword_basis);
    BitMatrix joint = code.h_;
    for (const auto& rep : coset_reps->rows()) {
      if (!in_rowspace(d_red, rep)) {
        throw ValidationError("from_check_matrix: coset representative outside codeword space");
      }
      joint.append_row(rep);
    }
    if (rank(joint) != r + k) {
      throw ValidationError("from_check_matrix: coset representatives not independent "
                            "modulo the stabilizer span");
    }
    code.coset_reps_ = *coset_reps;
  } else {
    code.coset_reps_ = extend_to_coset_basis(code.h_, codeword_basis);
  }
  code.h_red_ = rref(code.h_);
  code.d_red_ = rref(codeword_basis);
  return code;
}

SelfDualCssCode SelfDualCssCode::hamming_code(int m) {
  if (m < 3) {
    throw ValidationError("hamming_code: m must be >= 3 (m = 2 leaves no logical qubits)");
  }
  std::size_t n = (std::size_t{1} << m) - 1;
  BitMatrix h(static_cast<std::size_t>(m), n);
  for (std::size_t col = 1; col <= n; ++col) {
    for (int bit = 0; bit < m; ++bit) {
      if ((col >> bit) & 1u) h.row(bit).set(col - 1, true);
    }
  }
  SelfDualCssCode code = from_check_matrix(h);
  code.set_name("qhamming" + std::to_string(n));
  return code;
}

namespace {

BitVector supp(std::size_t n, std::initializer_list<int> qubits) {
  return BitVector::from_support(n, std::vector<int>(qubits));
}

// Gauge operators of the [[15,7,3]] code: six gauge pairs plus the
// (X^15, Z^15) logical pair. Pairs (1,2), (3,4), (5,6) have crossed supports.
ReferenceBasis qhamming15_gauge_basis() {
  const std::size_t n = 15;
  BitVector a = supp(n, {3, 7, 11, 15});
  BitVector b = supp(n, {12, 13, 14, 15});
  BitVector c = supp(n, {5, 7, 13, 15});
  BitVector d = supp(n, {10, 11, 14, 15});
  BitVector e = supp(n, {9, 11, 13, 15});
  BitVector f = supp(n, {6, 7, 14, 15});
  BitVector all = BitVector::ones(n);
  return {
      {a, b}, {b, a},
      {c, d}, {d, c},
      {e, f}, {f, e},
      {all, all},
  };
}

// The compatible basis for the [[15,7,3]] code, built as products of the
// gauge operators; every pair ends up with matching X/Z support.
ReferenceBasis qhamming15_compatible_basis() {
  ReferenceBasis gauge = qhamming15_gauge_basis();
  auto combine_x = [&](std::initializer_list<int> idx) {
    BitVector v(15);
    for (int j : idx) v ^= gauge[static_cast<std::size_t>(j - 1)].x;
    return v;
  };
  auto combine_z = [&](std::initializer_list<int> idx) {
    BitVector v(15);
    for (int j : idx) v ^= gauge[static_cast<std::size_t>(j - 1)].z;
    return v;
  };
  ReferenceBasis out;
  out.push_back({combine_x({1, 7}), combine_z({2, 7})});
  out.push_back({combine_x({2, 7}), combine_z({1, 7})});
  out.push_back({combine_x({1, 2, 3, 7}), combine_z({1, 2, 4, 7})});
  out.push_back({combine_x({1, 2, 4, 7}), combine_z({1, 2, 3, 7})});
  out.push_back({combine_x({1, 2, 3, 4, 5, 7}), combine_z({1, 2, 3, 4, 6, 7})});
  out.push_back({combine_x({1, 2, 3, 4, 6, 7}), combine_z({1, 2, 3, 4, 5, 7})});
  out.push_back({combine_x({1, 2, 3, 4, 5, 6, 7}), combine_z({1, 2, 3, 4, 5, 6, 7})});
  return out;
}

}  // namespace

SelfDualCssCode SelfDualCssCode::builtin(const std::string& name) {
  if (name == "qhamming15") {
    SelfDualCssCode code = hamming_code(4);
    code.set_name("qhamming15");
    code.gauge_basis_ = qhamming15_gauge_basis();
    code.set_reference_basis(qhamming15_compatible_basis());
    return code;
  }
  if (name == "c422") {
    SelfDualCssCode code = from_check_matrix(BitMatrix::from_strings({"1111"}));
    code.set_name("c422");
    return code;
  }
  if (name == "c622") {
    SelfDualCssCode code = from_check_matrix(BitMatrix::from_strings({"110011", "001111"}));
    code.set_name("c622");
    code.set_reference_basis({
        {supp(6, {1, 3, 5}), supp(6, {1, 3, 5})},
        {supp(6, {2, 4, 6}), supp(6, {2, 4, 6})},
    });
    return code;
  }
  if (name == "steane7") {
    SelfDualCssCode code = hamming_code(3);
    code.set_name("steane7");
    return code;
  }
  throw ValidationError("unknown catalog code: " + name);
}

bool SelfDualCssCode::in_stabilizer_span(const BitVector& v) const {
  return in_rowspace(h_red_, v);
}

bool SelfDualCssCode::in_codeword_space(const BitVector& v) const {
  return in_rowspace(d_red_, v);
}

int min_distance_bruteforce(const SelfDualCssCode& code) {
  std::size_t dims = code.r() + code.k();
  if (dims > 24) {
    throw ValidationError("min_distance_bruteforce: 2^" + std::to_string(dims) +
                          " codewords is too large (limit r + k <= 24)");
  }
  // Basis of D: stabilizer rows then coset representatives.
  std::vector<BitVector> basis;
  for (const auto& row : code.check_matrix().rows()) basis.push_back(row);
  for (const auto& rep : code.coset_reps().rows()) basis.push_back(rep);

  std::size_t best = std::numeric_limits<std::size_t>::max();
  BitVector current(code.n());
  uint32_t gray_prev = 0;
  for (uint32_t i = 1; i < (uint32_t{1} << dims); ++i) {
    uint32_t gray = i ^ (i >> 1);
    uint32_t changed = gray ^ gray_prev;
    gray_prev = gray;
    int bit = std::countr_zero(changed);
    current ^= basis[static_cast<std::size_t>(bit)];
    if (!code.in_stabilizer_span(current)) {
      best = std::min(best, current.weight());
    }
  }
  return static_cast<int>(best);
}

}  // namespace mlv
