#include <doctest.h>

#include "birat/field.hpp"

using namespace birat;

TEST_CASE("prime field arithmetic stays in range and satisfies the axioms") {
  Field F = Field::prime(101);
  CHECK(F.characteristic() == 101);
  CHECK(F.describe() == "GF(101)");

  for (long a = -5; a <= 5; ++a) {
    Scalar s = F.from_int(a);
    CHECK(s.residue() < 101);
  }

  // sampled axiom checks
  for (long a = 1; a < 30; a += 7)
    for (long b = 2; b < 40; b += 11)
      for (long c = 3; c < 50; c += 13) {
        Scalar A = F.from_int(a), B = F.from_int(b), C = F.from_int(c);
        CHECK(F.add(A, B) == F.add(B, A));
        CHECK(F.mul(A, B) == F.mul(B, A));
        CHECK(F.add(F.add(A, B), C) == F.add(A, F.add(B, C)));
        CHECK(F.mul(F.mul(A, B), C) == F.mul(A, F.mul(B, C)));
        CHECK(F.mul(A, F.add(B, C)) == F.add(F.mul(A, B), F.mul(A, C)));
        CHECK(F.add(A, F.neg(A)) == F.zero());
        CHECK(F.mul(A, F.inv(A)) == F.one());
        CHECK(F.sub(A, B) == F.add(A, F.neg(B)));
        CHECK(F.div(A, B) == F.mul(A, F.inv(B)));
      }

  CHECK(F.pow(F.from_int(2), 100) == F.one());  // Fermat
  CHECK(F.is_zero(F.from_int(101)));
  CHECK(F.is_one(F.from_int(102)));
}

TEST_CASE("rational field is exact") {
  Field Q = Field::rationals();
  CHECK(Q.characteristic() == 0);
  CHECK(Q.describe() == "QQ");

  Scalar third = Q.from_mpq(mpq_class(1, 3));
  Scalar sum = Q.zero();
  for (int i = 0; i < 3; ++i) sum = Q.add(sum, third);
  CHECK(Q.is_one(sum));

  // reduced representation, positive denominator
  Scalar q = Q.from_mpq(mpq_class(-4, -6));
  CHECK(q.rat().get_num() == 2);
  CHECK(q.rat().get_den() == 3);

  Scalar big = Q.pow(Q.from_int(10), 30);
  Scalar inv = Q.inv(big);
  CHECK(Q.is_one(Q.mul(big, inv)));
  CHECK(Q.to_string(Q.from_mpq(mpq_class(7, 2))) == "7/2");
}

TEST_CASE("invalid field parameters are rejected") {
  CHECK_THROWS_AS(Field::prime(0), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK_THROWS_AS(Field::prime(91), Error);  // 7 * 13
  Field F = Field::prime(7);
  CHECK_THROWS_AS(F.inv(F.zero()), Error);
}
