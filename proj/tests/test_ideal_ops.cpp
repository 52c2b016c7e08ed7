#include <doctest.h>

#include "birat/ideal_ops.hpp"
#include "helpers.hpp"

using namespace birat;
using namespace birat::testing;

TEST_CASE("ideal quotient") {
  RingPtr r = qq_ring({"x", "y", "z"});
  CHECK(same_ideal(ideal_quotient(ideal(r, {"x*y", "x*z"}), P(r, "x")), ideal(r, {"y", "z"})));
  // quotient by a non-divisor leaves the ideal alone
  CHECK(same_ideal(ideal_quotient(ideal(r, {"x^2"}), P(r, "y")), ideal(r, {"x^2"})));
  // ideal-by-ideal
  CHECK(same_ideal(ideal_quotient(ideal(r, {"x*y*z"}), ideal(r, {"x", "y"})),
                   ideal(r, {"x*y*z"})));
  CHECK(same_ideal(ideal_quotient(ideal(r, {"x*z", "y*z"}), ideal(r, {"x", "y"})),
                   ideal(r, {"z"})));
}

TEST_CASE("saturation removes embedded powers and is idempotent") {
  RingPtr r = qq_ring({"x", "y", "z"});

  // ((x^2*y, x^2*z, x*y*z) : x^inf) = (y, z)
  std::vector<Poly> I = ideal(r, {"x^2*y", "x^2*z", "x*y*z"});
  std::vector<Poly> sx = saturate(I, P(r, "x"));
  CHECK(same_ideal(sx, ideal(r, {"y", "z"})));
  CHECK(same_ideal(saturate(sx, P(r, "x")), sx));

  // saturation by the irrelevant ideal strips the x-multiple
  std::vector<Poly> irr = irrelevant_ideal(r);
  CHECK(same_ideal(irr, ideal(r, {"x", "y", "z"})));
  std::vector<Poly> J = ideal(r, {"x^2", "x*y", "x*z"});
  std::vector<Poly> s = saturate(J, irr);
  CHECK(same_ideal(s, ideal(r, {"x"})));
  CHECK(same_ideal(saturate(s, irr), s));

  // a saturated ideal is a fixed point
  std::vector<Poly> K = ideal(r, {"x*y - z^2"});
  CHECK(same_ideal(saturate(K, irr), K));
}

TEST_CASE("intersection") {
  RingPtr r = qq_ring({"x", "y"});
  CHECK(same_ideal(intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"})));
  CHECK(same_ideal(intersect(ideal(r, {"x", "y"}), ideal(r, {"x"})), ideal(r, {"x"})));
}

TEST_CASE("same_ideal is presentation independent") {
  RingPtr r = qq_ring({"x", "y"});
  CHECK(same_ideal(ideal(r, {"x + y", "x - y"}), ideal(r, {"x", "y"})));
  CHECK(same_ideal(ideal(r, {"2*x"}), ideal(r, {"x"})));
  CHECK(!same_ideal(ideal(r, {"x^2"}), ideal(r, {"x"})));
  CHECK(same_ideal({}, std::vector<Poly>{Poly::zero(r)}));
}
