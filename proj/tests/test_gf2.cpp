#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mlv/gf2.hpp"

using namespace mlv;

TEST_CASE("bitvector basics") {
  BitVector v = BitVector::from_string("101010");
  CHECK(v.size() == 6);
  CHECK(v.weight() == 3);
  CHECK(v.to_string() == "101010");
  CHECK(v.support() == std::vector<int>{1, 3, 5});
  CHECK(BitVector::from_support(6, {1, 3, 5}) == v);
  CHECK(BitVector::ones(4).to_string() == "1111");
  BitVector w(70);
  w.set(69, true);
  CHECK(w.weight() == 1);
  CHECK(w.get(69));
  CHECK((w ^ w).is_zero());
}

TEST_CASE("dot_mod2") {
  CHECK(dot_mod2(BitVector::from_string("110011"), BitVector::from_string("001111")) == 0);
  CHECK(dot_mod2(BitVector::from_string("101010"), BitVector(6)) == 0);
  CHECK(dot_mod2(BitVector::from_string("101010"), BitVector::from_string("101010")) == 1);
  CHECK_THROWS_AS(dot_mod2(BitVector(3), BitVector(4)), DimensionError);
}

TEST_CASE("rref") {
  BitMatrix id = BitMatrix::identity(3);
  RrefResult r = rref(id);
  CHECK(r.matrix == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  RrefResult one = rref(BitMatrix::from_strings({"1111"}));
  CHECK(one.matrix.row(0).to_string() == "1111");
  CHECK(one.pivots == std::vector<std::size_t>{0});

  RrefResult dup = rref(BitMatrix::from_strings({"0110", "0110"}));
  CHECK(dup.pivots.size() == 1);
  CHECK(dup.matrix.row(1).is_zero());
  CHECK(rank(BitMatrix::from_strings({"0110", "0110"})) == 1);
}

TEST_CASE("rref preserves the row space") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    BitMatrix m(5, 8);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 8; ++j) m.row(i).set(j, rng() & 1);
    }
    RrefResult red = rref(m);
    for (const auto& row : m.rows()) CHECK(in_rowspace(red, row));
    RrefResult orig = rref(m);
    for (const auto& row : red.matrix.rows()) CHECK(in_rowspace(orig, row));
  }
}

TEST_CASE("solve_linear") {
  BitMatrix h622 = BitMatrix::from_strings({"110011", "001111"});
  CHECK(solve_linear(h622, BitVector(2)).is_zero());

  BitMatrix m = BitMatrix::from_strings({"1100", "0011"});
  BitVector d = BitVector::from_string("10");
  BitVector v = solve_linear(m, d);
  CHECK(v.to_string() == "1000");

  // Inconsistent: two identical rows with differing right-hand sides.
  BitMatrix bad = BitMatrix::from_strings({"1100", "1100"});
  CHECK_THROWS_AS(solve_linear(bad, BitVector::from_string("10")), ValidationError);
}

TEST_CASE("solve_linear always satisfies the system") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    BitMatrix m(3, 7);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 7; ++j) m.row(i).set(j, rng() & 1);
    }
    BitVector d(3);
    for (std::size_t i = 0; i < 3; ++i) d.set(i, rng() & 1);
    BitVector v;
    try {
      v = solve_linear(m, d);
    } catch (const ValidationError&) {
      continue;  // genuinely inconsistent instance
    }
    for (std::size_t i = 0; i < 3; ++i) CHECK(dot_mod2(m.row(i), v) == (d.get(i) ? 1 : 0));
  }
}

TEST_CASE("nullspace_basis") {
  BitMatrix h422 = BitMatrix::from_strings({"1111"});
  BitMatrix ns = nullspace_basis(h422);
  CHECK(ns.row_count() == 3);
  for (const auto& row : ns.rows()) {
    CHECK(row.weight() % 2 == 0);
    CHECK(dot_mod2(h422.row(0), row) == 0);
  }

  BitMatrix zero(1, 5);
  CHECK(nullspace_basis(zero).row_count() == 5);
  CHECK(rank(nullspace_basis(zero)) == 5);

  BitMatrix h622 = BitMatrix::from_strings({"110011", "001111"});
  BitMatrix ns622 = nullspace_basis(h622);
  CHECK(ns622.row_count() == 4);
  for (const auto& row : ns622.rows()) {
    CHECK(dot_mod2(h622.row(0), row) == 0);
    CHECK(dot_mod2(h622.row(1), row) == 0);
  }
  CHECK(rank(ns622) == 4);
}

TEST_CASE("extend_to_coset_basis") {
  BitMatrix h622 = BitMatrix::from_strings({"110011", "001111"});
  BitMatrix d622 = nullspace_basis(h622);
  CHECK(extend_to_coset_basis(d622, d622).row_count() == 0);

  BitMatrix reps = extend_to_coset_basis(h622, d622);
  CHECK(reps.row_count() == 2);
  BitMatrix joint = h622;
  for (const auto& r : reps.rows()) joint.append_row(r);
  CHECK(rank(joint) == 4);

  // Not contained: the sub space sticks out of the full space.
  CHECK_THROWS_AS(extend_to_coset_basis(BitMatrix::from_strings({"100000"}), d622),
                  ValidationError);
}
