#pragma once

#include <vector>

#include "birat/groebner.hpp"

namespace birat {

// Projective variety presented as ambient ring plus homogeneous ideal, with
// the reduced Groebner basis of the ideal computed once. Value-semantic
// handle; presentations are immutable.
class Variety {
public:
  Variety() = default;
  Variety(RingPtr ambient, std::vector<Poly> ideal_gens, bool assume_domain = true);

  static Variety projective_space(RingPtr ambient);

  const RingPtr& ring() const { return d_->ring; }
  const std::vector<Poly>& ideal() const { return d_->ideal; }
  const GroebnerBasis& groebner() const { return d_->gb; }
  bool assume_domain() const { return d_->assume_domain; }
  bool ambient_is_whole() const { return d_->ideal.empty(); }

  Poly reduce(const Poly& p) const { return normal_form(p, d_->gb); }
  bool contains_poly(const Poly& p) const { return reduce(p).is_zero(); }

  // dimension of the degree-one part of the ideal; zero means nondegenerate
  std::size_t nondegeneracy_dim() const;

  bool same_presentation(const Variety& o) const;
  bool valid() const { return d_ != nullptr; }

private:
  struct Data {
    RingPtr ring;
    std::vector<Poly> ideal;
    GroebnerBasis gb;
    bool assume_domain;
  };
  std::shared_ptr<const Data> d_;
};

// Change of presentation that eliminates the linear part of the ideal, so the
// minimal variety sits nondegenerately in a smaller projective space. Records
// enough to push polynomials forward and to rebuild dropped coordinates.
struct Represent {
  Variety minimal;
  std::vector<std::uint32_t> kept;                // original indices of surviving vars
  std::vector<std::vector<Scalar>> coord_exprs;   // original var -> coeffs over kept vars
  bool trivial = true;

  Poly push(const Poly& p) const;  // original ambient -> minimal ambient
};

Represent minimal_representation(const Variety& v);

}  // namespace birat
