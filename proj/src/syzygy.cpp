#include "birat/syzygy.hpp"

#include <algorithm>

namespace birat {

namespace {

struct VTerm {
  Scalar c;
  std::uint32_t comp;
  ExpVec e;
};

// vector over the free module P^n, terms strictly descending
struct VPoly {
  std::vector<VTerm> t;
  bool is_zero() const { return t.empty(); }
  const VTerm& lead() const { return t.front(); }
};

// value components (below `split`) are eliminated first: any term in a value
// component outranks every tag term; within a class, ring order on the
// monomial, then lower component index wins
struct VOrder {
  const Ring* ring;
  std::uint32_t split;

  int cmp(const VTerm& a, const VTerm& b) const {
    bool atag = a.comp >= split, btag = b.comp >= split;
    if (atag != btag) return atag ? -1 : 1;
    int c = ring->cmp(ExpSpan(a.e), ExpSpan(b.e));
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
};

VPoly vmerge(const VOrder& ord, const VPoly& a, const Field& F, const Scalar& scale, ExpSpan m,
             const VPoly& b) {
  // a - scale * x^m * b
  VPoly out;
  out.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  auto shifted = [&](const VTerm& t) {
    VTerm r;
    r.c = F.neg(F.mul(scale, t.c));
    r.comp = t.comp;
    r.e = mono_mul(ExpSpan(t.e), m);
    return r;
  };
  while (i < a.t.size() && j < b.t.size()) {
    VTerm bt = shifted(b.t[j]);
    int c = ord.cmp(a.t[i], bt);
    if (c > 0) {
      out.t.push_back(a.t[i++]);
    } else if (c < 0) {
      out.t.push_back(std::move(bt));
      ++j;
    } else {
      Scalar s = F.add(a.t[i].c, bt.c);
      if (!F.is_zero(s)) out.t.push_back({std::move(s), a.t[i].comp, a.t[i].e});
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) out.t.push_back(shifted(b.t[j]));
  return out;
}

VPoly vnormalize(const Field& F, VPoly v) {
  if (v.is_zero()) return v;
  if (F.kind() == FieldKind::prime) {
    Scalar inv = F.inv(v.lead().c);
    for (auto& t : v.t) t.c = F.mul(inv, t.c);
    return v;
  }
  mpz_class den_lcm = 1;
  for (const auto& t : v.t)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.rat().get_den_mpz_t());
  mpz_class content = 0;
  for (const auto& t : v.t) {
    mpz_class num = t.c.rat().get_num() * (den_lcm / t.c.rat().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  mpq_class factor(den_lcm, content);
  factor.canonicalize();
  if (sgn(v.lead().c.rat()) < 0) factor = -factor;
  Scalar f(factor);
  for (auto& t : v.t) t.c = F.mul(f, t.c);
  return v;
}

struct ModuleGB {
  RingPtr ring;
  VOrder ord;
  const Field& F;
  std::vector<VPoly> basis;
  std::vector<std::uint64_t> mask;
  std::vector<std::uint64_t> sugar;

  struct PairRec {
    std::uint32_t i, j;
    ExpVec lcm;
    std::uint32_t comp;
    std::uint64_t sugar;
    std::uint32_t deg;
    bool alive = true;
    bool consumed = false;
  };
  std::vector<PairRec> pool;

  ModuleGB(RingPtr r, std::uint32_t split)
      : ring(std::move(r)), ord{ring.get(), split}, F(ring->field()) {}

  VPoly reduce_full(VPoly f, std::uint64_t* sug) const {
    VPoly out;
    VPoly work = std::move(f);
    while (!work.is_zero()) {
      const VTerm& lead = work.lead();
      std::uint64_t lm = support_mask(ExpSpan(lead.e));
      std::size_t hit = basis.size();
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].lead().comp != lead.comp) continue;
        if ((mask[k] & ~lm) != 0) continue;
        if (mono_divides(ExpSpan(basis[k].lead().e), ExpSpan(lead.e))) {
          hit = k;
          break;
        }
      }
      if (hit == basis.size()) {
        out.t.push_back(lead);
        work.t.erase(work.t.begin());
        continue;
      }
      const VPoly& g = basis[hit];
      Scalar c = F.div(lead.c, g.lead().c);
      ExpVec m = mono_div(ExpSpan(lead.e), ExpSpan(g.lead().e));
      if (sug) *sug = std::max(*sug, ring->total_degree(ExpSpan(m)) + sugar[hit]);
      work = vmerge(ord, work, F, c, ExpSpan(m), g);
    }
    return out;
  }

  void add_element(VPoly g, std::uint64_t sug) {
    std::uint32_t t = static_cast<std::uint32_t>(basis.size());
    const VTerm& lt = g.lead();
    struct Cand {
      std::uint32_t i;
      ExpVec lcm;
      bool alive = true;
    };
    std::vector<Cand> cands;
    for (std::uint32_t i = 0; i < t; ++i) {
      if (basis[i].lead().comp != lt.comp) continue;
      cands.push_back({i, mono_lcm(ExpSpan(basis[i].lead().e), ExpSpan(lt.e))});
    }
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
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].alive) continue;
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[b].alive && cands[b].lcm == cands[a].lcm) cands[b].alive = false;
      }
    }
    for (auto& p : pool) {
      if (!p.alive || p.consumed || p.comp != lt.comp) continue;
      if (!mono_divides(ExpSpan(lt.e), ExpSpan(p.lcm))) continue;
      ExpVec li = mono_lcm(ExpSpan(basis[p.i].lead().e), ExpSpan(lt.e));
      if (li == p.lcm) continue;
      ExpVec lj = mono_lcm(ExpSpan(basis[p.j].lead().e), ExpSpan(lt.e));
      if (lj == p.lcm) continue;
      p.alive = false;
    }
    for (auto& c : cands) {
      if (!c.alive) continue;
      std::uint32_t ldeg = ring->total_degree(ExpSpan(c.lcm));
      std::uint64_t si = sugar[c.i] + ldeg - ring->total_degree(ExpSpan(basis[c.i].lead().e));
      std::uint64_t st = sug + ldeg - ring->total_degree(ExpSpan(lt.e));
      pool.push_back({c.i, t, std::move(c.lcm), lt.comp, std::max(si, st), ldeg});
    }
    mask.push_back(support_mask(ExpSpan(lt.e)));
    sugar.push_back(sug);
    basis.push_back(std::move(g));
  }

  void insert_generator(VPoly g, std::uint64_t sug) {
    VPoly red = reduce_full(std::move(g), &sug);
    if (red.is_zero()) return;
    add_element(vnormalize(F, std::move(red)), sug);
  }

  void run() {
    auto order = [&](std::size_t a, std::size_t b) {
      const PairRec& pa = pool[a];
      const PairRec& pb = pool[b];
      if (pa.sugar != pb.sugar) return pa.sugar > pb.sugar;
      if (pa.deg != pb.deg) return pa.deg > pb.deg;
      if (pa.j != pb.j) return pa.j > pb.j;
      return pa.i > pb.i;
    };
    std::vector<std::size_t> heap;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (pool[k].alive && !pool[k].consumed) heap.push_back(k);
    std::make_heap(heap.begin(), heap.end(), order);
    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end(), order);
      std::size_t k = heap.back();
      heap.pop_back();
      PairRec& p = pool[k];
      if (!p.alive || p.consumed) continue;
      p.consumed = true;
      const VPoly& fi = basis[p.i];
      const VPoly& fj = basis[p.j];
      ExpVec mi = mono_div(ExpSpan(p.lcm), ExpSpan(fi.lead().e));
      ExpVec mj = mono_div(ExpSpan(p.lcm), ExpSpan(fj.lead().e));
      // s = lc_j * x^mi * fi - lc_i * x^mj * fj
      VPoly scaled;
      scaled.t.reserve(fi.t.size());
      for (const auto& t : fi.t)
        scaled.t.push_back({F.mul(fj.lead().c, t.c), t.comp, mono_mul(ExpSpan(t.e), ExpSpan(mi))});
      VPoly s = vmerge(ord, scaled, F, fi.lead().c, ExpSpan(mj), fj);
      std::uint64_t sug = p.sugar;
      VPoly red = reduce_full(std::move(s), &sug);
      if (red.is_zero()) continue;
      std::size_t before = pool.size();
      add_element(vnormalize(F, std::move(red)), sug);
      for (std::size_t n = before; n < pool.size(); ++n) {
        if (pool[n].alive) {
          heap.push_back(n);
          std::push_heap(heap.begin(), heap.end(), order);
        }
      }
    }
  }
};

}  // namespace

std::vector<std::vector<Poly>> module_kernel(const std::vector<std::vector<Poly>>& columns,
                                             const std::vector<Poly>& relations) {
  if (columns.empty()) return {};
  RingPtr ring;
  for (const auto& col : columns)
    for (const auto& p : col)
      if (!p.is_zero()) {
        ring = p.ring();
        break;
      }
  if (!ring) {
    for (const auto& r : relations)
      if (!r.is_zero()) ring = r.ring();
  }
  if (!ring) throw ValidationError("module kernel of an all-zero map");
  std::uint32_t k = static_cast<std::uint32_t>(columns[0].size());
  std::uint32_t t = static_cast<std::uint32_t>(columns.size());
  for (const auto& col : columns)
    if (col.size() != k) throw ValidationError("ragged column list");

  ModuleGB gb(ring, k);
  auto push_terms = [&](VPoly& v, const Poly& p, std::uint32_t comp) {
    for (std::size_t i = 0; i < p.nterms(); ++i) {
      VTerm vt;
      vt.c = p.coef(i);
      vt.comp = comp;
      vt.e.assign(p.exp(i).begin(), p.exp(i).end());
      v.t.push_back(std::move(vt));
    }
  };
  for (std::uint32_t j = 0; j < t; ++j) {
    VPoly v;
    std::uint64_t sug = 0;
    for (std::uint32_t c = 0; c < k; ++c) {
      push_terms(v, columns[j][c], c);
      sug = std::max<std::uint64_t>(sug, columns[j][c].total_degree());
    }
    VTerm tag;
    tag.c = ring->field().one();
    tag.comp = k + j;
    tag.e.assign(ring->nvars(), 0);
    v.t.push_back(std::move(tag));
    std::sort(v.t.begin(), v.t.end(),
              [&](const VTerm& a, const VTerm& b) { return gb.ord.cmp(a, b) > 0; });
    gb.insert_generator(std::move(v), sug);
  }
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    for (std::uint32_t c = 0; c < k; ++c) {
      VPoly v;
      push_terms(v, r, c);
      gb.insert_generator(std::move(v), r.total_degree());
    }
  }
  gb.run();

  std::vector<std::vector<Poly>> out;
  for (const auto& g : gb.basis) {
    bool tags_only = true;
    for (const auto& term : g.t)
      if (term.comp < k) {
        tags_only = false;
        break;
      }
    if (!tags_only) continue;
    std::vector<Poly> col(t, Poly::zero(ring));
    for (const auto& term : g.t) {
      Poly& dst = col[term.comp - k];
      dst.append_term(term.c, ExpSpan(term.e));
    }
    for (auto& p : col) p.canonicalize();
    out.push_back(std::move(col));
  }
  return out;
}

// Module basis of the span of (f; 1) and (a_j; 0) in P^2, value component
// first. Every element of the span is (q*f + sum k_j a_j; q), so the normal
// form of (num; 0) has zero value part exactly when num is divisible, and the
// tag part is then -q.
struct QuotientDivider::Impl {
  RingPtr ring;
  ModuleGB gb;

  Impl(RingPtr r) : ring(r), gb(std::move(r), 1) {}
};

QuotientDivider::QuotientDivider(const Poly& f, const std::vector<Poly>& relations)
    : impl_(std::make_unique<Impl>(f.ring())) {
  for (const auto& r : relations)
    if (r.ring() != f.ring()) throw RingMismatchError("relations live in a different ring");
  auto as_vpoly = [&](const Poly& p, std::uint32_t comp) {
    VPoly v;
    for (std::size_t i = 0; i < p.nterms(); ++i) {
      VTerm vt;
      vt.c = p.coef(i);
      vt.comp = comp;
      vt.e.assign(p.exp(i).begin(), p.exp(i).end());
      v.t.push_back(std::move(vt));
    }
    return v;
  };
  VPoly gen = as_vpoly(f, 0);
  VTerm tag;
  tag.c = f.ring()->field().one();
  tag.comp = 1;
  tag.e.assign(f.ring()->nvars(), 0);
  gen.t.push_back(std::move(tag));
  impl_->gb.insert_generator(std::move(gen), f.total_degree());
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    impl_->gb.insert_generator(as_vpoly(r, 0), r.total_degree());
  }
  impl_->gb.run();
}

QuotientDivider::~QuotientDivider() = default;
QuotientDivider::QuotientDivider(QuotientDivider&&) noexcept = default;
QuotientDivider& QuotientDivider::operator=(QuotientDivider&&) noexcept = default;

std::optional<Poly> QuotientDivider::divide(const Poly& num) const {
  if (num.ring() != impl_->ring) throw RingMismatchError("numerator lives in a different ring");
  const Field& F = impl_->ring->field();
  VPoly v;
  for (std::size_t i = 0; i < num.nterms(); ++i) {
    VTerm vt;
    vt.c = num.coef(i);
    vt.comp = 0;
    vt.e.assign(num.exp(i).begin(), num.exp(i).end());
    v.t.push_back(std::move(vt));
  }
  VPoly red = impl_->gb.reduce_full(std::move(v), nullptr);
  Poly q = Poly::zero(impl_->ring);
  for (const auto& t : red.t) {
    if (t.comp == 0) return std::nullopt;
    q.append_term(F.neg(t.c), ExpSpan(t.e));
  }
  q.canonicalize();
  return q;
}

SyzygyMatrix syzygies(const std::vector<Poly>& elements, const std::vector<Poly>& relations) {
  std::vector<std::vector<Poly>> columns;
  columns.reserve(elements.size());
  for (const auto& f : elements) columns.push_back({f});
  auto raw = module_kernel(columns, relations);

  SyzygyMatrix out;
  for (const auto& f : elements)
    if (!f.is_zero()) {
      out.ring = f.ring();
      break;
    }
  if (!out.ring && !elements.empty()) out.ring = elements.front().ring();

  std::vector<Poly> rel_gb;
  if (!relations.empty()) rel_gb = buchberger(relations).gens;
  for (auto& col : raw) {
    bool all_zero = true;
    for (auto& p : col) {
      if (!relations.empty()) p = normal_form(p, rel_gb);
      if (!p.is_zero()) all_zero = false;
    }
    if (!all_zero) out.cols.push_back(std::move(col));
  }
  return out;
}

}  // namespace birat
