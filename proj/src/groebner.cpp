#include "birat/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace birat {

namespace {

Poly tail(const Poly& p) {
  Poly out(p.ring());
  for (std::size_t i = 1; i < p.nterms(); ++i) out.append_term(p.coef(i), p.exp(i));
  return out;
}

}  // namespace

BuchbergerState::BuchbergerState(RingPtr ring, const std::vector<Poly>& gens)
    : ring_(std::move(ring)) {
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (*g.ring() != *ring_) throw RingMismatchError("generator outside the basis ring");
    insert_generator(g);
  }
}

bool BuchbergerState::pair_in_cap(const PairRec& p) const {
  return !cap_ || cap_->within(ExpSpan(p.lcm));
}

Poly BuchbergerState::reduce_full(Poly f, std::uint64_t* sugar) const {
  const Ring& R = *ring_;
  const Field& F = R.field();
  Poly out(ring_);
  Poly work = std::move(f);
  while (!work.is_zero()) {
    ExpSpan lead = work.lead_exp();
    std::uint64_t lm = support_mask(lead);
    std::size_t hit = basis_.size();
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if ((mask_[k] & ~lm) != 0) continue;
      if (mono_divides(basis_[k].lead_exp(), lead)) {
        hit = k;
        break;
      }
    }
    if (hit == basis_.size()) {
      out.append_term(work.lead_coef(), lead);
      work = tail(work);
      continue;
    }
    const Poly& g = basis_[hit];
    Scalar c = F.div(work.lead_coef(), g.lead_coef());
    ExpVec m = mono_div(lead, g.lead_exp());
    if (sugar) {
      std::uint64_t s = R.total_degree(ExpSpan(m)) + sugar_[hit];
      *sugar = std::max(*sugar, s);
    }
    work = reduce_step(work, c, ExpSpan(m), g);
  }
  return out;
}

void BuchbergerState::insert_generator(const Poly& g) {
  std::uint64_t sugar = g.total_degree();
  Poly red = reduce_full(g, &sugar);
  if (red.is_zero()) return;
  add_basis_element(normalize(red), sugar);
}

void BuchbergerState::add_basis_element(Poly g, std::uint64_t sugar) {
  const Ring& R = *ring_;
  std::uint32_t t = static_cast<std::uint32_t>(basis_.size());
  ExpSpan lt_t = g.lead_exp();

  // candidate pairs (i, t) with the Gebauer-Moller deletions
  struct Cand {
    std::uint32_t i;
    ExpVec lcm;
    bool coprime;
    bool alive = true;
  };
  std::vector<Cand> cands;
  cands.reserve(t);
  for (std::uint32_t i = 0; i < t; ++i) {
    ExpVec l = mono_lcm(basis_[i].lead_exp(), lt_t);
    bool cop = mono_coprime(basis_[i].lead_exp(), lt_t);
    cands.push_back({i, std::move(l), cop});
  }
  // M: drop candidates whose lcm is a proper multiple of another candidate lcm
  for (auto& a : cands) {
    if (!a.alive) continue;
    for (const auto& b : cands) {
      if (&a == &b || !b.alive) continue;
      if (mono_divides(ExpSpan(b.lcm), ExpSpan(a.lcm)) && a.lcm != b.lcm) {
        a.alive = false;
        break;
      }
    }
  }
  // F: among equal lcms keep a single representative, or none when some
  // member has coprime leading terms (its S-polynomial reduces to zero)
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!cands[a].alive) continue;
    bool any_coprime = cands[a].coprime;
    for (std::size_t b = a + 1; b < cands.size(); ++b) {
      if (!cands[b].alive || cands[b].lcm != cands[a].lcm) continue;
      any_coprime = any_coprime || cands[b].coprime;
      cands[b].alive = false;
    }
    if (any_coprime) cands[a].alive = false;
  }
  // B: the new leading term may retire old pairs
  for (auto& p : pool_) {
    if (!p.alive || p.consumed) continue;
    if (!mono_divides(lt_t, ExpSpan(p.lcm))) continue;
    ExpVec li = mono_lcm(basis_[p.i].lead_exp(), lt_t);
    if (li == p.lcm) continue;
    ExpVec lj = mono_lcm(basis_[p.j].lead_exp(), lt_t);
    if (lj == p.lcm) continue;
    p.alive = false;
  }

  const std::uint64_t sugar_t = sugar;
  for (auto& c : cands) {
    if (!c.alive) continue;
    std::uint32_t ldeg = R.total_degree(ExpSpan(c.lcm));
    std::uint64_t si =
        sugar_[c.i] + ldeg - R.total_degree(basis_[c.i].lead_exp());
    std::uint64_t st = sugar_t + ldeg - R.total_degree(lt_t);
    pool_.push_back({c.i, t, std::move(c.lcm), std::max(si, st), ldeg});
  }

  mask_.push_back(support_mask(lt_t));
  sugar_.push_back(sugar_t);
  basis_.push_back(std::move(g));
}

void BuchbergerState::run() {
  const Ring& R = *ring_;
  const Field& F = R.field();
  auto order = [&](std::size_t a, std::size_t b) {
    const PairRec& pa = pool_[a];
    const PairRec& pb = pool_[b];
    if (pa.sugar != pb.sugar) return pa.sugar > pb.sugar;  // min-heap
    if (pa.deg != pb.deg) return pa.deg > pb.deg;
    if (pa.j != pb.j) return pa.j > pb.j;
    return pa.i > pb.i;
  };
  std::vector<std::size_t> heap;
  for (std::size_t k = 0; k < pool_.size(); ++k)
    if (pool_[k].alive && !pool_[k].consumed && pair_in_cap(pool_[k])) heap.push_back(k);
  std::make_heap(heap.begin(), heap.end(), order);

  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), order);
    std::size_t k = heap.back();
    heap.pop_back();
    PairRec& p = pool_[k];
    if (!p.alive || p.consumed) continue;
    p.consumed = true;
    ++processed_;

    const Poly& fi = basis_[p.i];
    const Poly& fj = basis_[p.j];
    ExpVec mi = mono_div(ExpSpan(p.lcm), fi.lead_exp());
    ExpVec mj = mono_div(ExpSpan(p.lcm), fj.lead_exp());
    Poly s = sub(term_mul(fj.lead_coef(), ExpSpan(mi), fi),
                 term_mul(fi.lead_coef(), ExpSpan(mj), fj));
    if (F.kind() == FieldKind::rationals && !s.is_zero()) s = normalize(s);
    std::uint64_t sugar = p.sugar;
    Poly red = reduce_full(std::move(s), &sugar);
    if (red.is_zero()) continue;

    std::size_t before = pool_.size();
    add_basis_element(normalize(red), sugar);
    for (std::size_t n = before; n < pool_.size(); ++n) {
      if (pool_[n].alive && pair_in_cap(pool_[n])) {
        heap.push_back(n);
        std::push_heap(heap.begin(), heap.end(), order);
      }
    }
  }
}

bool BuchbergerState::exhausted() const {
  for (const auto& p : pool_)
    if (p.alive && !p.consumed) return false;
  return true;
}

GroebnerBasis BuchbergerState::snapshot() const {
  const Ring& R = *ring_;
  // minimal leading terms: ascending scan keeps an element only when no kept
  // lead divides it
  std::vector<std::uint32_t> idx(basis_.size());
  for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    return R.cmp(basis_[a].lead_exp(), basis_[b].lead_exp()) < 0;
  });
  std::vector<std::uint32_t> kept;
  for (auto i : idx) {
    bool dominated = false;
    for (auto k : kept) {
      if (mono_divides(basis_[k].lead_exp(), basis_[i].lead_exp())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(i);
  }
  // tail-reduce every kept element against the other kept ones
  std::vector<Poly> out;
  out.reserve(kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a) {
    std::vector<Poly> others;
    others.reserve(kept.size() - 1);
    for (std::size_t b = 0; b < kept.size(); ++b)
      if (b != a) others.push_back(basis_[kept[b]]);
    out.push_back(normalize(normal_form(basis_[kept[a]], others)));
  }
  std::sort(out.begin(), out.end(),
            [&](const Poly& a, const Poly& b) { return R.cmp(a.lead_exp(), b.lead_exp()) < 0; });
  GroebnerBasis gb;
  gb.ring = ring_;
  gb.gens = std::move(out);
  gb.complete = exhausted();
  return gb;
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, std::optional<std::pair<int, int>> cap) {
  RingPtr ring;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      ring = g.ring();
      break;
    }
  if (!ring) {
    if (gens.empty()) throw ValidationError("buchberger needs at least one generator");
    ring = gens.front().ring();
  }
  BuchbergerState st(ring, gens);
  if (cap) {
    if (!ring->is_bigraded()) throw ValidationError("truncation cap requires a bigraded ring");
    for (const auto& g : gens)
      if (!g.is_zero() && !g.bidegree())
        throw ValidationError("truncation cap requires bihomogeneous generators");
    WeightCap wc;
    wc.w1.resize(ring->nvars());
    wc.w2.resize(ring->nvars());
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      wc.w1[v] = ring->is_second_block(v) ? 0 : 1;
      wc.w2[v] = ring->is_second_block(v) ? 1 : 0;
    }
    wc.max1 = static_cast<std::uint64_t>(cap->first);
    wc.max2 = static_cast<std::uint64_t>(cap->second);
    st.set_cap(wc);
  }
  st.run();
  GroebnerBasis gb = st.snapshot();
  gb.cap = cap;
  return gb;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& reducers) {
  if (f.is_zero()) return f;
  const Ring& R = *f.ring();
  const Field& F = R.field();
  std::vector<std::uint64_t> masks;
  masks.reserve(reducers.size());
  for (const auto& g : reducers) masks.push_back(g.is_zero() ? ~std::uint64_t{0} : support_mask(g.lead_exp()));
  Poly out(f.ring());
  Poly work = f;
  while (!work.is_zero()) {
    ExpSpan lead = work.lead_exp();
    std::uint64_t lm = support_mask(lead);
    std::size_t hit = reducers.size();
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      if (reducers[k].is_zero() || (masks[k] & ~lm) != 0) continue;
      if (mono_divides(reducers[k].lead_exp(), lead)) {
        hit = k;
        break;
      }
    }
    if (hit == reducers.size()) {
      out.append_term(work.lead_coef(), lead);
      work = tail(work);
      continue;
    }
    const Poly& g = reducers[hit];
    Scalar c = F.div(work.lead_coef(), g.lead_coef());
    ExpVec m = mono_div(lead, g.lead_exp());
    work = reduce_step(work, c, ExpSpan(m), g);
  }
  return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  if (!f.is_zero() && *f.ring() != *gb.ring)
    throw RingMismatchError("normal form against a basis from another ring");
  return normal_form(f, gb.gens);
}

std::vector<Poly> eliminate(const std::vector<Poly>& gens,
                            const std::vector<std::uint32_t>& drop_vars) {
  RingPtr ring;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      ring = g.ring();
      break;
    }
  if (!ring) return {};
  std::set<std::uint32_t> drop(drop_vars.begin(), drop_vars.end());

  // the dropped set must be screened off by the order: either a prefix of
  // blocks, or the x-part of a bidegree-refined comparison
  bool ok = false;
  std::set<std::uint32_t> prefix;
  for (const auto& b : ring->blocks()) {
    for (std::uint32_t v = b.begin; v < b.end; ++v) prefix.insert(v);
    if (prefix == drop) {
      ok = true;
      break;
    }
    if (prefix.size() >= drop.size()) break;
  }
  if (!ok && ring->is_bigraded() && ring->blocks().size() == 1 &&
      ring->blocks()[0].kind == BlockKind::bigrevlex) {
    std::set<std::uint32_t> xpart;
    for (std::uint32_t v = 0; v < ring->nvars(); ++v)
      if (!ring->is_second_block(v)) xpart.insert(v);
    ok = (xpart == drop);
  }
  if (!ok) throw ValidationError("monomial order does not eliminate the requested variables");

  GroebnerBasis gb = buchberger(gens);
  std::vector<Poly> out;
  for (const auto& g : gb.gens) {
    ExpSpan lead = g.lead_exp();
    bool free = true;
    for (auto v : drop)
      if (lead[v]) {
        free = false;
        break;
      }
    if (free) out.push_back(g);
  }
  return out;
}

bool is_unit_ideal(const GroebnerBasis& gb) {
  return gb.gens.size() == 1 && !gb.gens[0].is_zero() &&
         mono_is_one(gb.gens[0].lead_exp());
}

}  // namespace birat
