#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlv/code.hpp"

using namespace mlv;

namespace {

BitMatrix qhamming15_printed_rows() {
  BitMatrix h(0, 15);
  h.append_row(BitVector::from_support(15, {1, 3, 5, 7, 9, 11, 13, 15}));
  h.append_row(BitVector::from_support(15, {2, 3, 6, 7, 10, 11, 14, 15}));
  h.append_row(BitVector::from_support(15, {4, 5, 6, 7, 12, 13, 14, 15}));
  h.append_row(BitVector::from_support(15, {8, 9, 10, 11, 12, 13, 14, 15}));
  return h;
}

}  // namespace

TEST_CASE("from_check_matrix validates invariants") {
  SelfDualCssCode q15 = SelfDualCssCode::from_check_matrix(qhamming15_printed_rows());
  CHECK(q15.n() == 15);
  CHECK(q15.k() == 7);
  CHECK(q15.r() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      CHECK(dot_mod2(q15.check_matrix().row(i), q15.check_matrix().row(j)) == 0);
    }
    for (const auto& rep : q15.coset_reps().rows()) {
      CHECK(dot_mod2(q15.check_matrix().row(i), rep) == 0);
    }
  }

  SelfDualCssCode c422 = SelfDualCssCode::from_check_matrix(BitMatrix::from_strings({"1111"}));
  CHECK(c422.n() == 4);
  CHECK(c422.k() == 2);

  CHECK_THROWS_AS(SelfDualCssCode::from_check_matrix(BitMatrix::from_strings({"1100", "1010"})),
                  ValidationError);
}

TEST_CASE("redundant generators are reduced, degenerate codes rejected") {
  SelfDualCssCode dup =
      SelfDualCssCode::from_check_matrix(BitMatrix::from_strings({"1111", "1111"}));
  CHECK(dup.was_reduced());
  CHECK(dup.r() == 1);
  CHECK(dup.k() == 2);

  // n = 2r leaves no logical qubits.
  CHECK_THROWS_AS(SelfDualCssCode::from_check_matrix(BitMatrix::from_strings({"11"})),
                  ValidationError);
}

TEST_CASE("hamming family") {
  CHECK_THROWS_AS(SelfDualCssCode::hamming_code(2), ValidationError);
  for (int m : {3, 4, 5, 6}) {
    SelfDualCssCode code = SelfDualCssCode::hamming_code(m);
    std::size_t n = (std::size_t{1} << m) - 1;
    CHECK(code.n() == n);
    CHECK(code.r() == static_cast<std::size_t>(m));
    CHECK(code.k() == n - 2 * m);
  }
  // m = 4 is row-equivalent to the printed generators.
  SelfDualCssCode q15 = SelfDualCssCode::hamming_code(4);
  BitMatrix printed = qhamming15_printed_rows();
  for (const auto& row : printed.rows()) CHECK(in_rowspace(q15.check_matrix(), row));
  for (const auto& row : q15.check_matrix().rows()) CHECK(in_rowspace(printed, row));
}

TEST_CASE("catalog entries") {
  SelfDualCssCode c622 = SelfDualCssCode::builtin("c622");
  CHECK(c622.check_matrix().row(0).to_string() == "110011");
  CHECK(c622.check_matrix().row(1).to_string() == "001111");
  REQUIRE(c622.reference_basis());
  CHECK((*c622.reference_basis())[0].x.support() == std::vector<int>{1, 3, 5});
  CHECK((*c622.reference_basis())[1].x.support() == std::vector<int>{2, 4, 6});

  SelfDualCssCode c422 = SelfDualCssCode::builtin("c422");
  CHECK(c422.check_matrix().row(0).to_string() == "1111");
  CHECK_FALSE(c422.reference_basis());

  SelfDualCssCode q15 = SelfDualCssCode::builtin("qhamming15");
  REQUIRE(q15.reference_basis());
  REQUIRE(q15.gauge_basis());
  // supp(X'_1) = supp(X_1 X_7) = complement of {3,7,11,15}.
  BitVector expect = BitVector::ones(15) ^ BitVector::from_support(15, {3, 7, 11, 15});
  CHECK((*q15.reference_basis())[0].x == expect);
  CHECK((*q15.gauge_basis())[6].x == BitVector::ones(15));

  CHECK(SelfDualCssCode::builtin("steane7").k() == 1);
  CHECK_THROWS_AS(SelfDualCssCode::builtin("nope"), ValidationError);
}

TEST_CASE("derived and supplied coset representatives span the same quotient") {
  SelfDualCssCode q15 = SelfDualCssCode::builtin("qhamming15");
  // Gauge X supports are one valid representative set.
  BitMatrix supplied(0, 15);
  for (const auto& pair : *q15.gauge_basis()) supplied.append_row(pair.x);
  SelfDualCssCode with = SelfDualCssCode::from_check_matrix(q15.check_matrix(), supplied);
  // Mutual reduction: each derived rep lies in span(H, supplied) and back.
  BitMatrix span_a = q15.check_matrix();
  for (const auto& r : supplied.rows()) span_a.append_row(r);
  BitMatrix span_b = q15.check_matrix();
  for (const auto& r : q15.coset_reps().rows()) span_b.append_row(r);
  for (const auto& r : q15.coset_reps().rows()) CHECK(in_rowspace(span_a, r));
  for (const auto& r : with.coset_reps().rows()) CHECK(in_rowspace(span_b, r));

  // Bad representative sets are rejected.
  BitMatrix dependent(0, 15);
  for (int i = 0; i < 7; ++i) dependent.append_row(q15.check_matrix().row(0));
  CHECK_THROWS_AS(SelfDualCssCode::from_check_matrix(q15.check_matrix(), dependent),
                  ValidationError);
}

TEST_CASE("membership helpers") {
  SelfDualCssCode c622 = SelfDualCssCode::builtin("c622");
  CHECK(c622.in_stabilizer_span(BitVector::from_string("110011")));
  CHECK(c622.in_stabilizer_span(BitVector::from_string("111100")));
  CHECK_FALSE(c622.in_stabilizer_span(BitVector::from_string("101010")));
  CHECK(c622.in_codeword_space(BitVector::from_string("101010")));
  CHECK_FALSE(c622.in_codeword_space(BitVector::from_string("100000")));
}

TEST_CASE("brute-force distance") {
  CHECK(min_distance_bruteforce(SelfDualCssCode::builtin("c422")) == 2);
  CHECK(min_distance_bruteforce(SelfDualCssCode::builtin("c622")) == 2);
  CHECK(min_distance_bruteforce(SelfDualCssCode::builtin("steane7")) == 3);
  CHECK(min_distance_bruteforce(SelfDualCssCode::builtin("qhamming15")) == 3);
  CHECK_THROWS_AS(min_distance_bruteforce(SelfDualCssCode::hamming_code(6)), ValidationError);
}
