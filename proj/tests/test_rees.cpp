#include <doctest.h>

#include "birat/ideal_ops.hpp"
#include "birat/rees.hpp"
#include "helpers.hpp"

using namespace birat;
using namespace birat::testing;

namespace {

// the defining invariant: substituting Y_j -> f_j sends every generator to
// zero modulo the source ideal, so each one is a genuine relation
void check_relations(const ReesChunk& c, const RationalMap& F) {
  const RingPtr& src = F.source().ring();
  std::vector<Poly> images;
  for (std::uint32_t i = 0; i < c.nx; ++i) images.push_back(Poly::variable(src, i));
  for (const Poly& f : F.forms()) images.push_back(f);
  for (const Poly& g : c.gens) {
    Poly val = substitute(g, images);
    CHECK(F.source().reduce(val).is_zero());
  }
}

void check_bihomogeneous(const ReesChunk& c) {
  REQUIRE(c.gens.size() == c.bidegs.size());
  for (std::size_t i = 0; i < c.gens.size(); ++i) {
    auto d = c.gens[i].bidegree();
    REQUIRE(d.has_value());
    CHECK(d->x == c.bidegs[i].x);
    CHECK(d->y == c.bidegs[i].y);
  }
}

}  // namespace

TEST_CASE("relation ideal of the degree two rational normal curve") {
  RingPtr s = qq_ring({"s", "t"});
  RingPtr a3 = qq_ring({"a", "b", "c"});
  RationalMap ver(Variety::projective_space(s), Variety::projective_space(a3),
                  ideal(s, {"s^2", "s*t", "t^2"}));

  ReesChunk full = rees_full(ver);
  CHECK(full.full);
  CHECK(full.strategy == "rees");
  CHECK(full.nx == 2);
  check_relations(full, ver);
  check_bihomogeneous(full);

  // the expected relations: t*a - s*b, t*b - s*c, b^2 - a*c
  const RingPtr& xy = full.xy_ring;
  std::vector<Poly> expect = {P(xy, "t*a - s*b"), P(xy, "t*b - s*c"), P(xy, "b^2 - a*c")};
  CHECK(same_ideal(full.gens, expect));

  ReesChunk sat = rees_saturation(ver);
  CHECK(sat.full);
  CHECK(sat.strategy == "saturation");
  check_relations(sat, ver);
  CHECK(same_ideal(sat.gens, full.gens));
}

TEST_CASE("truncations are sound and resume into the full basis") {
  RingPtr r = qq_ring({"x", "y", "z"});
  RationalMap cr = self_map(r, {"y*z", "x*z", "x*y"});

  ReesChunk t1 = rees_truncated(cr, 1);
  CHECK(!t1.full);
  CHECK(t1.truncated_to >= 1);
  check_relations(t1, cr);
  check_bihomogeneous(t1);

  ReesChunk full = rees_full(cr);
  GroebnerBasis gb = buchberger(full.gens);
  for (const Poly& g : t1.gens) CHECK(normal_form(g, gb).is_zero());

  // the staged system reuses one state: escalating produces consistent chunks
  ReesChunk t2 = rees_truncated(cr, 2);
  CHECK(t2.truncated_to >= 2);
  for (const Poly& g : t2.gens) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("linear part is x-linear, sorted, and reproduces the dual rows") {
  RingPtr r = qq_ring({"x", "y", "z"});
  RationalMap cr = self_map(r, {"y*z", "x*z", "x*y"});
  ReesChunk full = rees_full(cr);
  std::vector<Poly> lin = linear_part(full);
  REQUIRE(!lin.empty());
  long last = 0;
  for (const Poly& g : lin) {
    auto d = g.bidegree();
    REQUIRE(d.has_value());
    CHECK(d->x == 1);
    CHECK(d->y >= last);
    last = d->y;
  }
  // membership in the relation ideal
  GroebnerBasis gb = buchberger(full.gens);
  for (const Poly& g : lin) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("relations over a quotient source") {
  RingPtr r = qq_ring({"a", "b", "c", "d"});
  Variety cone(r, ideal(r, {"a*c - b^2"}));
  RingPtr t = qq_ring({"u", "v", "w"});
  RationalMap pr(cone, Variety::projective_space(t), ideal(r, {"a", "b", "c"}));

  ReesChunk full = rees_full(pr);
  check_relations(full, pr);
  check_bihomogeneous(full);

  ReesChunk sat = rees_saturation(pr);
  CHECK(same_ideal(sat.gens, full.gens));

  // the source equation appears among the (\ast, 0) relations
  const RingPtr& xy = full.xy_ring;
  GroebnerBasis gb = buchberger(full.gens);
  CHECK(normal_form(P(xy, "a*c - b^2"), gb).is_zero());
}
