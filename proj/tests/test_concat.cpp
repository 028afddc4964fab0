#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "mlv/concat.hpp"

using namespace mlv;

namespace {

ConcatenatedCode two_level_small() {
  return concatenate({SelfDualCssCode::builtin("c622"), SelfDualCssCode::builtin("c622")});
}

ConcatenatedCode two_level_large() {
  return concatenate({SelfDualCssCode::builtin("qhamming15"), SelfDualCssCode::builtin("c622")});
}

using Mat2 = std::array<std::array<std::complex<double>, 2>, 2>;

Mat2 matmul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Mat2 gate_matrix(Gate g) {
  const double s = 1.0 / std::sqrt(2.0);
  const std::complex<double> i(0, 1);
  switch (g) {
    case Gate::H: return {{{s, s}, {s, -s}}};
    case Gate::S: return {{{1, 0}, {0, i}}};
    default: REQUIRE(false);
  }
  return {};
}

}  // namespace

TEST_CASE("two levels of the [[6,2,2]] code") {
  ConcatenatedCode cc = two_level_small();
  CHECK(cc.N == 36);
  CHECK(cc.K == 4);
  CHECK(cc.distance_lb == 4);
  CHECK(cc.level_widths == std::vector<std::size_t>{36, 12, 4});
  // r = (N - K) / 2 stabilizer generators: 12 inner + 4 expanded outer.
  CHECK(cc.stabilizers.size() == 16);
  CHECK(cc.logical_pairs.size() == 4);
  for (const auto& s : cc.stabilizers) CHECK(s.size() == 36);
}

TEST_CASE("fifteen-qubit inner code under a [[6,2,2]] outer code") {
  ConcatenatedCode cc = two_level_large();
  CHECK(cc.N == 90);
  CHECK(cc.K == 14);
  CHECK(cc.distance_lb == 6);
  CHECK(cc.level_widths == std::vector<std::size_t>{90, 42, 14});
  CHECK(cc.stabilizers.size() == 38);  // 24 inner + 14 outer-expanded
  CHECK(cc.logical_pairs.size() == 14);
}

TEST_CASE("single level degenerates to the base code") {
  ConcatenatedCode cc = concatenate({SelfDualCssCode::builtin("c622")});
  CHECK(cc.N == 6);
  CHECK(cc.K == 2);
  CHECK(cc.level_widths == std::vector<std::size_t>{6, 2});
  MultilevelReport report = verify_multilevel(cc, 16, 1);
  CHECK(report.pass);
  CHECK(report.sign_patterns_checked == 4);
}

TEST_CASE("coordinate maps are inverse bijections") {
  ConcatenatedCode cc = two_level_large();
  for (std::size_t l = 0; l <= 2; ++l) {
    for (std::size_t idx = 0; idx < cc.width(l); ++idx) {
      CHECK(coords_to_index(cc, l, index_to_coords(cc, l, idx)) == idx);
    }
  }
  CHECK(level_dims(cc, 1) == std::vector<std::size_t>{7, 6});
  CHECK(cc.width(1) == 42);
}

TEST_CASE("levels without a compatible basis are rejected") {
  std::vector<SelfDualCssCode> codes = {SelfDualCssCode::builtin("c422"),
                                        SelfDualCssCode::builtin("c622")};
  CHECK_THROWS_WITH_AS(concatenate(codes),
                       "concatenate: level 1 has no compatible symplectic basis",
                       UnsupportedError);
}

TEST_CASE("multilevel verification passes for both stacks") {
  MultilevelReport small = verify_multilevel(two_level_small(), 16, 7);
  CHECK(small.pass);
  CHECK(small.sign_patterns_checked == 16);  // exhaustive at K = 4

  MultilevelReport large = verify_multilevel(two_level_large(), 32, 7);
  CHECK(large.pass);
  CHECK(large.sign_patterns_checked >= 32);  // sampled at K = 14
}

TEST_CASE("a corrupted level-2 basis is located by name") {
  SelfDualCssCode c622 = SelfDualCssCode::builtin("c622");
  SymplecticBasis good = build_compatible_basis(c622);
  // Crossed shape: structurally symplectic but not all-H compatible.
  SymplecticBasis crossed = classify_pairs(
      {{BitVector::from_string("101010"), BitVector::from_string("010101")},
       {BitVector::from_string("010101"), BitVector::from_string("101010")}});
  REQUIRE_FALSE(crossed.all_matched());

  ConcatenatedCode cc = concatenate_with_bases({c622, c622}, {good, crossed});
  MultilevelReport report = verify_multilevel(cc, 16, 7);
  CHECK_FALSE(report.pass);
  bool names_level_2 = false;
  for (const auto& f : report.failures) {
    if (f.rfind("level 2: ", 0) == 0) names_level_2 = true;
    CHECK(f.rfind("level 1: ", 0) != 0);
  }
  CHECK(names_level_2);
}

TEST_CASE("an outer-block H merges with inner H layers into one physical layer") {
  ConcatenatedCode cc = two_level_large();

  // H on both top-level qubits of the first outer block.
  LiftedLayer u1;
  u1.level = 2;
  u1.gates.assign(14, Gate::I);
  u1.gates[coords_to_index(cc, 2, {0, 0})] = Gate::H;
  u1.gates[coords_to_index(cc, 2, {0, 1})] = Gate::H;

  // H on the 36 level-1 qubits outside that block.
  LiftedLayer u2;
  u2.level = 1;
  u2.gates.assign(42, Gate::I);
  for (std::size_t idx = 0; idx < 42; ++idx) {
    if (index_to_coords(cc, 1, idx)[0] != 0) u2.gates[idx] = Gate::H;
  }
  CHECK(std::count(u2.gates.begin(), u2.gates.end(), Gate::H) == 36);

  MergeReport report;
  LiftedLayer merged = merge_product(cc, {u1, u2}, &report);
  CHECK(report.achieved_level == 0);
  CHECK(merged.level == 0);
  CHECK(merged.gates.size() == 90);
  for (Gate g : merged.gates) CHECK(g == Gate::H);
}

TEST_CASE("single-qubit word reduction") {
  CHECK(reduce_single_qubit_word({}) == Gate::I);
  CHECK(reduce_single_qubit_word({Gate::H, Gate::H}) == Gate::I);
  CHECK(reduce_single_qubit_word({Gate::S, Gate::S}) == Gate::Z);
  CHECK(reduce_single_qubit_word({Gate::S, Gate::Sdg}) == Gate::I);
  CHECK(reduce_single_qubit_word({Gate::H, Gate::S, Gate::H, Gate::S, Gate::H, Gate::S}) ==
        Gate::I);
  // X -> X, Z -> -Y: no single gate in the set acts this way.
  CHECK_FALSE(reduce_single_qubit_word({Gate::H, Gate::S, Gate::H}).has_value());

  // Independent check that HSHSHS is a global phase times the identity.
  Mat2 m{{{1, 0}, {0, 1}}};
  for (Gate g : {Gate::H, Gate::S, Gate::H, Gate::S, Gate::H, Gate::S}) {
    m = matmul(gate_matrix(g), m);
  }
  CHECK(std::abs(m[0][1]) < 1e-12);
  CHECK(std::abs(m[1][0]) < 1e-12);
  CHECK(std::abs(m[0][0] - m[1][1]) < 1e-12);
  CHECK(std::abs(std::abs(m[0][0]) - 1.0) < 1e-12);
}

TEST_CASE("a layer times its inverse merges to the identity at the bottom") {
  ConcatenatedCode cc = two_level_large();
  LiftedLayer s_layer{2, std::vector<Gate>(14, Gate::S)};
  LiftedLayer sdg_layer{2, std::vector<Gate>(14, Gate::Sdg)};
  MergeReport report;
  LiftedLayer merged = merge_product(cc, {s_layer, sdg_layer}, &report);
  CHECK(report.achieved_level == 0);
  CHECK(merged.gates == std::vector<Gate>(90, Gate::I));
}

TEST_CASE("partial blocks stay at their level") {
  ConcatenatedCode cc = two_level_small();
  // H on level-1 qubits 0 and 2: block c_2 = 0 gets (H, I), a mixed shape.
  LiftedLayer a{1, std::vector<Gate>(12, Gate::I)};
  a.gates[0] = Gate::H;
  LiftedLayer b{1, std::vector<Gate>(12, Gate::I)};
  b.gates[2] = Gate::H;
  MergeReport report;
  LiftedLayer merged = merge_product(cc, {a, b}, &report);
  CHECK(report.achieved_level == 1);
  CHECK(merged.level == 1);
  CHECK(merged.gates[0] == Gate::H);
  CHECK(merged.gates[2] == Gate::H);

  // A mixed S/H block cannot be merged per qubit either.
  LiftedLayer s{1, std::vector<Gate>(12, Gate::S)};
  LiftedLayer h{1, std::vector<Gate>(12, Gate::H)};
  CHECK_THROWS_AS(merge_product(cc, {s, h}), UnsupportedError);
}

TEST_CASE("lifted sign patterns act blockwise") {
  ConcatenatedCode cc = two_level_small();
  PhasePattern all = lift_sign_pattern(cc, PhasePattern::all_plus(4));
  CHECK(all.size() == 36);
  CHECK_THROWS_AS(lift_sign_pattern(cc, PhasePattern::all_plus(3)), DimensionError);
  // The lifted all-(+1) layer realizes +1 on every lifted pair.
  TransversalLayer layer = all.to_layer();
  for (std::size_t j = 0; j < 4; ++j) {
    PauliOperator xj = PauliOperator::x_type(cc.logical_pairs[j].x);
    PauliOperator expected =
        pauli_multiply(xj, PauliOperator::z_type(cc.logical_pairs[j].z));
    expected.phase = (expected.phase + 1) % 4;
    CHECK(conjugate_by_layer(xj, layer) == expected);
  }
}
