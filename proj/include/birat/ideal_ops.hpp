#pragma once

#include <vector>

#include "birat/syzygy.hpp"

namespace birat {

// (I : f) = { g : g*f in I }
std::vector<Poly> ideal_quotient(const std::vector<Poly>& I, const Poly& f);

// (K : I) for I given by generators
std::vector<Poly> ideal_quotient(const std::vector<Poly>& K, const std::vector<Poly>& I);

// (I : f^inf), iterated quotient with a stabilization test; homogeneous ideals
// saturated by a power of one variable take the reverse-lex divide-out route
std::vector<Poly> saturate(const std::vector<Poly>& I, const Poly& f);

// (I : J^inf) as the intersection of the single-element saturations
std::vector<Poly> saturate(const std::vector<Poly>& I, const std::vector<Poly>& J);

std::vector<Poly> intersect(const std::vector<Poly>& I, const std::vector<Poly>& J);

std::vector<Poly> irrelevant_ideal(const RingPtr& ring);

bool same_ideal(const std::vector<Poly>& I, const std::vector<Poly>& J);

}  // namespace birat
