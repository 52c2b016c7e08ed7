#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birat/ring.hpp"

namespace birat {

// Sparse multivariate polynomial. Terms are kept strictly descending in the
// ring's monomial order; exponents live in one flat array (nterms * nvars).
class Poly {
public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly monomial(RingPtr ring, const Scalar& c, ExpVec e);
  static Poly variable(RingPtr ring, std::size_t v, Exp e = 1);

  const RingPtr& ring() const { return ring_; }
  std::size_t nterms() const { return coef_.size(); }
  bool is_zero() const { return coef_.empty(); }

  const Scalar& coef(std::size_t i) const { return coef_[i]; }
  ExpSpan exp(std::size_t i) const {
    std::size_t nv = ring_->nvars();
    return ExpSpan(exp_.data() + i * nv, nv);
  }
  const Scalar& lead_coef() const { return coef_.front(); }
  ExpSpan lead_exp() const { return exp(0); }

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::uint32_t total_degree() const;        // max over terms, 0 for zero poly
  bool is_homogeneous() const;
  std::optional<Bideg> bidegree() const;     // set iff nonzero and bihomogeneous

  std::string to_string() const;

  // construction path used by all arithmetic: append in arbitrary order,
  // then canonicalize (sort, merge, drop zeros)
  void append_term(const Scalar& c, ExpSpan e);
  void canonicalize();

private:
  RingPtr ring_;
  std::vector<Scalar> coef_;
  std::vector<Exp> exp_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scalar_mul(const Scalar& c, const Poly& a);
// c * x^m * a
Poly term_mul(const Scalar& c, ExpSpan m, const Poly& a);
// a - c * x^m * b, the reduction step, merge based
Poly reduce_step(const Poly& a, const Scalar& c, ExpSpan m, const Poly& b);
Poly pow(const Poly& a, unsigned long e);

// exact division by a single polynomial; throws Error when not divisible
Poly exact_div(const Poly& a, const Poly& b);

// partial derivative
Poly derivative(const Poly& a, std::size_t var);

// ring morphism determined by per-variable images (all in one target ring)
Poly substitute(const Poly& a, const std::vector<Poly>& images);

Scalar evaluate(const Poly& a, const std::vector<Scalar>& point);

// map a into another ring: variable i of a.ring() becomes variable var_map[i]
Poly transplant(const Poly& a, const RingPtr& to, const std::vector<std::uint32_t>& var_map);

// GF(p): make monic. QQ: scale to coprime integer coefficients, positive lead.
Poly normalize(const Poly& a);

// total order on polynomials of one ring (for canonical sorting): compares
// term lists lexicographically by (monomial, then coefficient string)
int poly_cmp(const Poly& a, const Poly& b);

std::string to_string(const std::vector<Poly>& gens);  // "ideal(...)" form

}  // namespace birat
