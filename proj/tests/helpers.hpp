#pragma once

#include <random>
#include <string>
#include <vector>

#include "birat/expr.hpp"
#include "birat/rational_map.hpp"

namespace birat::testing {

inline RingPtr qq_ring(std::vector<std::string> names) {
  return Ring::standard(Field::rationals(), std::move(names));
}

inline RingPtr gf_ring(std::uint32_t p, std::vector<std::string> names) {
  return Ring::standard(Field::prime(p), std::move(names));
}

inline Poly P(const RingPtr& r, const std::string& text) { return parse_poly(r, text); }

inline std::vector<Poly> ideal(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(parse_poly(r, t));
  return out;
}

inline RationalMap self_map(const RingPtr& r, const std::vector<std::string>& forms) {
  Variety pn = Variety::projective_space(r);
  return RationalMap(pn, pn, ideal(r, forms));
}

// random nonzero polynomial: up to `terms` monomials of degree <= deg
inline Poly random_poly(const RingPtr& r, std::mt19937& rng, int terms, int deg) {
  std::uniform_int_distribution<int> tcount(1, terms);
  std::uniform_int_distribution<int> ecoef(1, 50);
  std::uniform_int_distribution<int> evar(0, deg);
  Poly f(r);
  int n = tcount(rng);
  for (int t = 0; t < n; ++t) {
    ExpVec e(r->nvars(), 0);
    int budget = evar(rng);
    std::uniform_int_distribution<std::size_t> which(0, r->nvars() - 1);
    for (int i = 0; i < budget; ++i) e[which(rng)] += 1;
    f.append_term(r->field().from_int(ecoef(rng)), ExpSpan(e));
  }
  f.canonicalize();
  if (f.is_zero()) f = Poly::constant(r, r->field().one());
  return f;
}

// random homogeneous polynomial of exact degree deg
inline Poly random_form(const RingPtr& r, std::mt19937& rng, int terms, int deg) {
  std::uniform_int_distribution<int> ecoef(1, 50);
  Poly f(r);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(r->nvars(), 0);
    std::uniform_int_distribution<std::size_t> which(0, r->nvars() - 1);
    for (int i = 0; i < deg; ++i) e[which(rng)] += 1;
    f.append_term(r->field().from_int(ecoef(rng)), ExpSpan(e));
  }
  f.canonicalize();
  if (f.is_zero()) {
    ExpVec e(r->nvars(), 0);
    e[0] = static_cast<Exp>(deg);
    f = Poly::monomial(r, r->field().one(), std::move(e));
  }
  return f;
}

}  // namespace birat::testing
