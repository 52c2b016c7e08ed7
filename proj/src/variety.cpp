#include "birat/variety.hpp"

#include <algorithm>
#include <numeric>

namespace birat {

Variety::Variety(RingPtr ambient, std::vector<Poly> ideal_gens, bool assume_domain) {
  std::vector<Poly> gens;
  for (auto& g : ideal_gens) {
    if (g.is_zero()) continue;
    if (*g.ring() != *ambient) throw RingMismatchError("ideal generator outside the ambient ring");
    if (!g.is_homogeneous()) throw ValidationError("variety ideal must be homogeneous");
    gens.push_back(normalize(g));
  }
  GroebnerBasis gb =
      gens.empty() ? GroebnerBasis{ambient, {}, true, std::nullopt} : buchberger(gens);
  if (is_unit_ideal(gb)) throw ValidationError("ideal cuts out the empty variety");
  auto d = std::make_shared<Data>();
  d->ring = std::move(ambient);
  d->ideal = std::move(gens);
  d->gb = std::move(gb);
  d->assume_domain = assume_domain;
  d_ = std::move(d);
}

Variety Variety::projective_space(RingPtr ambient) { return Variety(std::move(ambient), {}); }

std::size_t Variety::nondegeneracy_dim() const {
  std::size_t n = 0;
  for (const auto& g : d_->gb.gens)
    if (g.total_degree() == 1) ++n;
  return n;
}

bool Variety::same_presentation(const Variety& o) const {
  if (d_ == o.d_) return true;
  return *d_->ring == *o.d_->ring && d_->gb == o.d_->gb;
}

Poly Represent::push(const Poly& p) const {
  if (trivial) return p;
  const RingPtr& to = minimal.ring();
  const Field& F = to->field();
  std::vector<Poly> images;
  images.reserve(coord_exprs.size());
  for (const auto& coeffs : coord_exprs) {
    Poly im(to);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (F.is_zero(coeffs[k])) continue;
      ExpVec e(to->nvars(), 0);
      e[k] = 1;
      im.append_term(coeffs[k], e);
    }
    im.canonicalize();
    images.push_back(std::move(im));
  }
  return substitute(p, images);
}

Represent minimal_representation(const Variety& v) {
  Represent rep;
  rep.minimal = v;
  rep.kept.resize(v.ring()->nvars());
  std::iota(rep.kept.begin(), rep.kept.end(), 0);
  const Field& F = v.ring()->field();
  for (std::size_t i = 0; i < rep.kept.size(); ++i) {
    std::vector<Scalar> unit(rep.kept.size(), F.zero());
    unit[i] = F.one();
    rep.coord_exprs.push_back(std::move(unit));
  }

  while (true) {
    const Variety& cur = rep.minimal;
    const RingPtr& ring = cur.ring();
    std::vector<const Poly*> linear;
    for (const auto& g : cur.groebner().gens)
      if (g.total_degree() == 1) linear.push_back(&g);
    if (linear.empty()) return rep;
    if (linear.size() >= ring->nvars())
      throw ValidationError("ideal eliminates every coordinate");

    auto only_var = [&](ExpSpan e) {
      for (std::size_t vv = 0; vv < e.size(); ++vv)
        if (e[vv]) return vv;
      throw Error("constant term in a linear form");
    };

    // reduced basis: each linear form has a distinct lead variable and its
    // tail avoids every lead variable
    std::vector<bool> dropped(ring->nvars(), false);
    for (const Poly* g : linear) dropped[only_var(g->lead_exp())] = true;
    std::vector<std::uint32_t> kept_cur;
    for (std::uint32_t i = 0; i < ring->nvars(); ++i)
      if (!dropped[i]) kept_cur.push_back(i);
    std::vector<std::uint32_t> pos(ring->nvars(), 0);  // cur var -> kept slot
    for (std::uint32_t k = 0; k < kept_cur.size(); ++k) pos[kept_cur[k]] = k;

    // cur var -> coefficients over kept_cur
    std::vector<std::vector<Scalar>> expr_cur(ring->nvars(),
                                              std::vector<Scalar>(kept_cur.size(), F.zero()));
    for (auto k : kept_cur) expr_cur[k][pos[k]] = F.one();
    for (const Poly* g : linear) {
      std::size_t lead_var = only_var(g->lead_exp());
      Scalar lc_inv = F.inv(g->lead_coef());
      for (std::size_t t = 1; t < g->nterms(); ++t)
        expr_cur[lead_var][pos[only_var(g->exp(t))]] = F.neg(F.mul(lc_inv, g->coef(t)));
    }

    RingPtr next_ring = ring->subring(kept_cur);
    std::vector<Poly> images;
    for (std::size_t vv = 0; vv < ring->nvars(); ++vv) {
      Poly im(next_ring);
      for (std::size_t k = 0; k < kept_cur.size(); ++k) {
        if (F.is_zero(expr_cur[vv][k])) continue;
        ExpVec e(next_ring->nvars(), 0);
        e[k] = 1;
        im.append_term(expr_cur[vv][k], e);
      }
      im.canonicalize();
      images.push_back(std::move(im));
    }
    std::vector<Poly> next_gens;
    for (const auto& g : cur.ideal()) {
      Poly h = substitute(g, images);
      if (!h.is_zero()) next_gens.push_back(h);
    }
    Variety next(next_ring, std::move(next_gens), cur.assume_domain());

    // compose the coordinate bookkeeping
    std::vector<std::uint32_t> new_kept;
    for (auto k : kept_cur) new_kept.push_back(rep.kept[k]);
    std::vector<std::vector<Scalar>> new_exprs;
    for (const auto& coeffs : rep.coord_exprs) {
      std::vector<Scalar> row(kept_cur.size(), F.zero());
      for (std::size_t c = 0; c < coeffs.size(); ++c) {
        if (F.is_zero(coeffs[c])) continue;
        for (std::size_t k = 0; k < kept_cur.size(); ++k)
          row[k] = F.add(row[k], F.mul(coeffs[c], expr_cur[c][k]));
      }
      new_exprs.push_back(std::move(row));
    }
    rep.minimal = std::move(next);
    rep.kept = std::move(new_kept);
    rep.coord_exprs = std::move(new_exprs);
    rep.trivial = false;
  }
}

}  // namespace birat
