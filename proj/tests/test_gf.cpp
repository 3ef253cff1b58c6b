#include <doctest.h>

#include "monocodes/error.hpp"
#include "monocodes/gf.hpp"

using namespace monocodes;

TEST_CASE("field construction") {
  const FieldSpec f5(5);
  CHECK(f5.q() == 5);
  CHECK(f5.modulus().empty());
  CHECK(FieldSpec(2).q() == 2);

  // Exhaustive over the four monic quadratics of F_2: only x^2 + x + 1 has
  // no root.
  const FieldSpec f4(2, 2);
  CHECK(f4.q() == 4);
  CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});

  // x^2 + 1 is irreducible over F_3 (-1 is not a square) and precedes every
  // other candidate with nonzero constant term.
  CHECK(FieldSpec(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});

  CHECK_THROWS_AS(FieldSpec(6), PreconditionError);
  CHECK_THROWS_AS(FieldSpec(1), PreconditionError);
  CHECK_THROWS_AS(FieldSpec(5, 0), PreconditionError);
  CHECK_THROWS_AS(FieldSpec(2, 17), PreconditionError);
}

TEST_CASE("element arithmetic") {
  const FieldSpec f5(5);
  CHECK((f5.from_int(3) * f5.from_int(4)) == f5.from_int(2));
  CHECK((f5.one() / f5.from_int(3)) == f5.from_int(2));
  CHECK(f5.from_int(4).pow(3) == f5.from_int(4));
  CHECK(f5.from_int(3).pow(0) == f5.one());
  CHECK(f5.zero().pow(0) == f5.one());
  CHECK(f5.from_int(2).pow(4) == f5.one());
  CHECK(f5.from_int(-1) == f5.from_int(4));
  CHECK_THROWS_AS(f5.one() / f5.zero(), PreconditionError);

  const FieldSpec f4(2, 2);
  const FieldElement x = f4.element(2);
  CHECK((x * x) == f4.element(3));  // x^2 = x + 1
  CHECK((x * x).to_string() == "1+x");
  CHECK_THROWS_AS(f5.one() + f4.one(), PreconditionError);
}

TEST_CASE("field_elements enumeration order") {
  std::vector<std::string> names;
  for (const auto& e : field_elements(FieldSpec(2, 2))) names.push_back(e.to_string());
  CHECK(names == std::vector<std::string>{"0", "1", "x", "1+x"});
  CHECK(field_elements(FieldSpec(5)).size() == 5);
  CHECK(field_elements(FieldSpec(2)).back().to_string() == "1");
}

TEST_CASE("element text round trip") {
  for (const auto& spec : {FieldSpec(7), FieldSpec(2, 3), FieldSpec(3, 2), FieldSpec(5, 2)}) {
    for (const auto& e : field_elements(spec)) CHECK(spec.parse(e.to_string()) == e.code());
  }
  const FieldSpec f9(3, 2);
  CHECK(f9.parse("2*x + 1") == f9.parse("1+2x"));
  CHECK(f9.parse("(x^1)") == 3);
  CHECK_THROWS_AS(f9.parse("x^2"), PreconditionError);
  CHECK_THROWS_AS(f9.parse("y"), PreconditionError);
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
  for (const auto& spec : {FieldSpec(2), FieldSpec(3), FieldSpec(2, 2), FieldSpec(5), FieldSpec(7), FieldSpec(2, 3),
                           FieldSpec(3, 2)}) {
    CAPTURE(spec.describe());
    const auto all = field_elements(spec);
    for (const auto& a : all) {
      if (!a.is_zero()) {
        CHECK(a.pow(spec.q() - 1) == spec.one());
        int inverses = 0;
        for (const auto& b : all) inverses += (a * b == spec.one());
        CHECK(inverses == 1);
      }
      for (const auto& b : all) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        for (const auto& c : all) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}
