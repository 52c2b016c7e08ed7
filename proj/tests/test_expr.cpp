#include <doctest.h>

#include "helpers.hpp"

using namespace birat;
using namespace birat::testing;

TEST_CASE("tokenizer basics") {
  auto toks = tokenize("map F : A -> B = [x, 2];");
  REQUIRE(!toks.empty());
  // the arrow is one token
  bool arrow = false;
  for (const auto& t : toks) arrow = arrow || (t.kind == TokKind::symbol && t.text == "->");
  CHECK(arrow);
  CHECK(toks.back().kind == TokKind::end);
}

TEST_CASE("precedence and grouping") {
  RingPtr r = qq_ring({"x", "y", "z"});
  CHECK(P(r, "x + y*z^2") == add(P(r, "x"), mul(P(r, "y"), P(r, "z^2"))));
  CHECK(P(r, "(x + y)*z") == mul(add(P(r, "x"), P(r, "y")), P(r, "z")));
  CHECK(P(r, "-x^2") == neg(P(r, "x^2")));
  CHECK(P(r, "x - y - z") == sub(sub(P(r, "x"), P(r, "y")), P(r, "z")));
  CHECK(P(r, "2*x^3*y") == scalar_mul(r->field().from_int(2), P(r, "x^3*y")));
}

TEST_CASE("rational coefficients") {
  RingPtr r = qq_ring({"x"});
  CHECK(P(r, "1/2*x + 1/2*x") == P(r, "x"));
  CHECK(P(r, "3/6") == P(r, "1/2"));
}

TEST_CASE("parse errors carry positions") {
  RingPtr r = qq_ring({"x", "y"});
  CHECK_THROWS_AS(P(r, "x + "), ParseError);
  CHECK_THROWS_AS(P(r, "q + x"), ParseError);     // unknown variable
  CHECK_THROWS_AS(P(r, "x ^ y"), ParseError);     // non-integer exponent
  CHECK_THROWS_AS(P(r, "x / y"), ParseError);     // division only between integers
  CHECK_THROWS_AS(P(r, "x + y z"), ParseError);   // trailing garbage
  try {
    parse_poly(r, "x +\n  * y");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 3);
  }
}
