#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "mlv/formats.hpp"

using namespace mlv;

TEST_CASE("code files round-trip") {
  for (const char* key : {"c422", "c622", "steane7", "qhamming15"}) {
    SelfDualCssCode orig = SelfDualCssCode::builtin(key);
    SelfDualCssCode back = parse_code_file(serialize_code(orig));
    CHECK(back.name() == orig.name());
    CHECK(back.n() == orig.n());
    CHECK(back.check_matrix() == orig.check_matrix());
    CHECK(back.coset_reps() == orig.coset_reps());
    CHECK(back.reference_basis().has_value() == orig.reference_basis().has_value());
    if (orig.reference_basis()) {
      REQUIRE(back.reference_basis()->size() == orig.reference_basis()->size());
      for (std::size_t j = 0; j < orig.reference_basis()->size(); ++j) {
        CHECK((*back.reference_basis())[j].x == (*orig.reference_basis())[j].x);
        CHECK((*back.reference_basis())[j].z == (*orig.reference_basis())[j].z);
      }
    }
  }
}

TEST_CASE("code file parsing details") {
  SelfDualCssCode code = parse_code_file(
      "# comment\n"
      "name: demo\n"
      "n: 4\n"
      "H:\n"
      "1111\n");
  CHECK(code.name() == "demo");
  CHECK(code.n() == 4);
  CHECK(code.k() == 2);

  // Line numbers in errors point at the offending line.
  try {
    parse_code_file("n: 4\nH:\n1111\n111\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("row length 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_code_file("n: 4\nH:\n11x1\n"), ParseError);
  CHECK_THROWS_AS(parse_code_file("n: 4\n1111\n"), ParseError);  // row outside a section
  CHECK_THROWS_AS(parse_code_file("H:\n1111\n"), ParseError);    // missing n
  CHECK_THROWS_AS(parse_code_file("n: 4\n"), ParseError);        // missing H
  CHECK_THROWS_AS(parse_code_file("n: four\n"), ParseError);
}

TEST_CASE("basis files round-trip") {
  SelfDualCssCode q15 = SelfDualCssCode::builtin("qhamming15");
  for (const auto& printed : {*q15.reference_basis(), *q15.gauge_basis()}) {
    SymplecticBasis basis = classify_pairs(printed);
    SymplecticBasis back = parse_basis_file(serialize_basis(basis));
    REQUIRE(back.size() == basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      CHECK(back.pairs[j].x == basis.pairs[j].x);
      CHECK(back.pairs[j].z == basis.pairs[j].z);
      CHECK(back.structure[j].matched == basis.structure[j].matched);
      CHECK(back.structure[j].partner == basis.structure[j].partner);
    }
  }
}

TEST_CASE("basis file parsing details") {
  SymplecticBasis one = parse_basis_file("X: 1100  Z: 1010  class: crossed(2)\n"
                                         "X: 1010  Z: 1100  class: crossed(1)\n");
  CHECK(one.size() == 2);
  CHECK_FALSE(one.structure[0].matched);
  CHECK(one.structure[0].partner == 1);

  try {
    parse_basis_file("X: 1100 Z: 1010 class: matched\nX: 1010 Z: 1100 class: twisted\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_basis_file("X: 1100 Z: 1010\n"), ParseError);
  CHECK_THROWS_AS(parse_basis_file("X: 1100 Z: 1010 class: crossed(x)\n"), ParseError);
  CHECK_THROWS_AS(parse_basis_file("X: 1100 Z: 1010 class: crossed(0)\n"), ParseError);
  // Partner beyond the pair list.
  CHECK_THROWS_AS(parse_basis_file("X: 1100 Z: 1010 class: crossed(5)\n"), ParseError);
}

TEST_CASE("code references resolve catalog keys and files") {
  CHECK(resolve_code_reference("c622").n() == 6);
  CHECK(resolve_code_reference("hamming5").n() == 31);
  CHECK_THROWS_AS(resolve_code_reference("hammingx"), ValidationError);
  CHECK_THROWS_AS(resolve_code_reference("/no/such/file"), ValidationError);

  std::string path = "/tmp/mlv_fmt_test_code.txt";
  write_file(path, serialize_code(SelfDualCssCode::builtin("steane7")));
  CHECK(resolve_code_reference(path).n() == 7);
  std::remove(path.c_str());
}

TEST_CASE("concat specs are ordered innermost first") {
  std::vector<SelfDualCssCode> codes =
      parse_concat_spec("# stack\nqhamming15\nc622\n");
  REQUIRE(codes.size() == 2);
  CHECK(codes[0].n() == 15);
  CHECK(codes[1].n() == 6);
  CHECK_THROWS_AS(parse_concat_spec("# nothing\n"), ValidationError);
}
