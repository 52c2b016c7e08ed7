#pragma once

#include <memory>
#include <vector>

#include "birat/variety.hpp"

namespace birat {

// A rational map between projective varieties, presented by homogeneous forms
// of one common degree in the coordinate ring of the source, one form per
// coordinate of the target's ambient space. Forms are stored reduced modulo
// the source ideal. Construction validates the presentation: equal degrees,
// homogeneity, not all forms zero on the source, and containment of the image
// in the target variety.
class RationalMap {
public:
  RationalMap(Variety source, Variety target, std::vector<Poly> forms);

  const Variety& source() const { return d_->source; }
  const Variety& target() const { return d_->target; }
  const std::vector<Poly>& forms() const { return d_->forms; }
  std::uint32_t degree() const { return d_->degree; }

  // Defining ideal of the closed image inside the target ambient ring,
  // reduced modulo the target ideal. Empty when the map is dominant.
  // Computed once per map and cached.
  const std::vector<Poly>& image_ideal() const;
  bool is_dominant() const;

  // True when the two presentations define the same map of varieties, i.e.
  // every cross product f_i*g_j - f_j*g_i vanishes on the source.
  bool same_map(const RationalMap& other) const;

  // Ideal generated by the coordinates of every representative of the map,
  // cutting out the locus where no representative is defined. Optionally
  // saturated by the irrelevant ideal.
  std::vector<Poly> base_locus(bool saturate_output = true) const;
  bool is_regular() const;

  // this map followed by `then`
  RationalMap compose(const RationalMap& then) const;

  // same forms, restated toward a subvariety of the same ambient target
  RationalMap with_target(Variety target) const;

  static RationalMap identity(const Variety& v);

  // opaque per-map slot where the elimination machinery parks resumable state
  std::shared_ptr<void> stage_cache() const;
  void set_stage_cache(std::shared_ptr<void> cache) const;

private:
  struct Data {
    Variety source;
    Variety target;
    std::vector<Poly> forms;
    std::uint32_t degree = 0;
    mutable std::shared_ptr<const std::vector<Poly>> image;
    mutable std::shared_ptr<void> stage;
  };
  std::shared_ptr<Data> d_;
};

}  // namespace birat
