#include "birat/ideal_ops.hpp"

#include <algorithm>
#include <numeric>

namespace birat {

namespace {

RingPtr ring_of(const std::vector<Poly>& gens, const Poly* extra = nullptr) {
  for (const auto& g : gens)
    if (g.ring()) return g.ring();
  if (extra && extra->ring()) return extra->ring();
  throw ValidationError("cannot infer the ambient ring");
}

std::vector<Poly> collect_first_coords(const std::vector<std::vector<Poly>>& taus) {
  std::vector<Poly> out;
  for (const auto& t : taus)
    if (!t[0].is_zero()) out.push_back(normalize(t[0]));
  return out;
}

bool all_homogeneous(const std::vector<Poly>& gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) return false;
  return true;
}

// saturation by one variable: grevlex with that variable last, then strip the
// variable from every basis element
std::vector<Poly> saturate_by_var(const std::vector<Poly>& I, std::uint32_t var) {
  RingPtr ring = ring_of(I);
  std::vector<std::uint32_t> order;
  for (std::uint32_t v = 0; v < ring->nvars(); ++v)
    if (v != var) order.push_back(v);
  order.push_back(var);
  RingPtr aux = ring->permuted_grevlex(order);
  std::vector<std::uint32_t> fwd(ring->nvars());  // original var -> aux var
  for (std::uint32_t k = 0; k < order.size(); ++k) fwd[order[k]] = k;

  std::vector<Poly> moved;
  moved.reserve(I.size());
  for (const auto& g : I) moved.push_back(transplant(g, aux, fwd));
  GroebnerBasis gb = buchberger(moved);

  std::uint32_t last = static_cast<std::uint32_t>(aux->nvars()) - 1;
  std::vector<Poly> out;
  for (const auto& g : gb.gens) {
    Exp strip = 0xffff;
    for (std::size_t t = 0; t < g.nterms(); ++t) strip = std::min(strip, g.exp(t)[last]);
    Poly h(aux);
    for (std::size_t t = 0; t < g.nterms(); ++t) {
      ExpVec e(g.exp(t).begin(), g.exp(t).end());
      e[last] = static_cast<Exp>(e[last] - strip);
      h.append_term(g.coef(t), e);
    }
    h.canonicalize();
    out.push_back(transplant(h, ring, order));
  }
  return out;
}

}  // namespace

std::vector<Poly> ideal_quotient(const std::vector<Poly>& I, const Poly& f) {
  RingPtr ring = ring_of(I, &f);
  if (f.is_zero()) return {Poly::constant(ring, ring->field().one())};
  std::vector<Poly> gens;
  for (const auto& g : I)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) return {};
  auto taus = module_kernel({{f}}, gens);
  return collect_first_coords(taus);
}

std::vector<Poly> ideal_quotient(const std::vector<Poly>& K, const std::vector<Poly>& I) {
  std::vector<Poly> col;
  for (const auto& f : I)
    if (!f.is_zero()) col.push_back(f);
  if (col.empty()) {
    RingPtr ring = ring_of(K);
    return {Poly::constant(ring, ring->field().one())};  // (K : 0) is everything
  }
  std::vector<Poly> rel;
  for (const auto& g : K)
    if (!g.is_zero()) rel.push_back(g);
  auto taus = module_kernel({col}, rel);
  return collect_first_coords(taus);
}

std::vector<Poly> saturate(const std::vector<Poly>& I, const Poly& f) {
  RingPtr ring = ring_of(I, &f);
  if (f.is_zero()) return {Poly::constant(ring, ring->field().one())};

  if (f.nterms() == 1 && all_homogeneous(I)) {
    ExpSpan e = f.lead_exp();
    long var = -1;
    bool single = true;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      if (var >= 0) {
        single = false;
        break;
      }
      var = static_cast<long>(v);
    }
    if (single && var >= 0) return saturate_by_var(I, static_cast<std::uint32_t>(var));
    if (single && var < 0) return I;  // nonzero constant: saturation changes nothing
  }

  std::vector<Poly> cur;
  for (const auto& g : I)
    if (!g.is_zero()) cur.push_back(g);
  GroebnerBasis cur_gb = buchberger(cur.empty() ? std::vector<Poly>{Poly::zero(ring)} : cur);
  while (true) {
    std::vector<Poly> next = ideal_quotient(cur, f);
    GroebnerBasis next_gb =
        buchberger(next.empty() ? std::vector<Poly>{Poly::zero(ring)} : next);
    if (next_gb == cur_gb) return cur;
    cur = std::move(next);
    cur_gb = std::move(next_gb);
  }
}

std::vector<Poly> saturate(const std::vector<Poly>& I, const std::vector<Poly>& J) {
  std::vector<Poly> nonzero;
  for (const auto& g : J)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) {
    RingPtr ring = ring_of(I);
    return {Poly::constant(ring, ring->field().one())};
  }
  std::vector<Poly> acc = saturate(I, nonzero[0]);
  for (std::size_t i = 1; i < nonzero.size(); ++i)
    acc = intersect(acc, saturate(I, nonzero[i]));
  return acc;
}

std::vector<Poly> intersect(const std::vector<Poly>& I, const std::vector<Poly>& J) {
  RingPtr ring = ring_of(I.empty() ? J : I);
  if (I.empty() || J.empty()) return {};
  RingPtr ext = ring->with_prefix_block({"@t"});
  std::vector<std::uint32_t> up(ring->nvars());
  std::iota(up.begin(), up.end(), 1);

  Poly t = Poly::variable(ext, 0);
  Poly one_minus_t = sub(Poly::constant(ext, ext->field().one()), t);
  std::vector<Poly> gens;
  for (const auto& g : I) {
    if (g.is_zero()) continue;
    gens.push_back(mul(t, transplant(g, ext, up)));
  }
  for (const auto& g : J) {
    if (g.is_zero()) continue;
    gens.push_back(mul(one_minus_t, transplant(g, ext, up)));
  }
  if (gens.empty()) return {};
  std::vector<Poly> lifted = eliminate(gens, {0});

  std::vector<std::uint32_t> down(ext->nvars());
  down[0] = 0;  // never used: eliminated elements are free of @t
  for (std::size_t v = 1; v < down.size(); ++v) down[v] = static_cast<std::uint32_t>(v - 1);
  std::vector<Poly> out;
  for (const auto& g : lifted) out.push_back(normalize(transplant(g, ring, down)));
  return out;
}

std::vector<Poly> irrelevant_ideal(const RingPtr& ring) {
  std::vector<Poly> out;
  for (std::size_t v = 0; v < ring->nvars(); ++v) out.push_back(Poly::variable(ring, v));
  return out;
}

bool same_ideal(const std::vector<Poly>& I, const std::vector<Poly>& J) {
  RingPtr ring = ring_of(I.empty() ? J : I);
  auto pad = [&](const std::vector<Poly>& v) {
    std::vector<Poly> nz;
    for (const auto& g : v)
      if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) nz.push_back(Poly::zero(ring));
    return nz;
  };
  return buchberger(pad(I)) == buchberger(pad(J));
}

}  // namespace birat
