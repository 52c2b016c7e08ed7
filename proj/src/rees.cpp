#include "birat/rees.hpp"

#include <algorithm>
#include <unordered_set>

#include "birat/ideal_ops.hpp"
#include "birat/syzygy.hpp"

namespace birat {

namespace {

// joint grevlex over source then target names (renamed where they collide),
// bigraded so chunk bidegrees stay available; the single-block order keeps
// the basis shaped like the usual presentation rather than an elimination one
RingPtr make_xy_ring(const RationalMap& F) {
  const RingPtr& R = F.source().ring();
  const RingPtr& T = F.target().ring();
  std::vector<std::string> names = R->names();
  std::unordered_set<std::string> used(names.begin(), names.end());
  for (const auto& n : T->names()) {
    std::string c = n;
    while (used.count(c)) c += "'";
    used.insert(c);
    names.push_back(std::move(c));
  }
  std::uint32_t n = static_cast<std::uint32_t>(names.size());
  std::vector<std::uint8_t> second(n, 0);
  for (std::size_t i = R->nvars(); i < n; ++i) second[i] = 1;
  return std::make_shared<Ring>(R->field(), std::move(names),
                                std::vector<OrderBlock>{{0, n, BlockKind::grevlex}},
                                std::move(second), true);
}

std::vector<std::uint32_t> shift_map(std::uint32_t n, std::uint32_t offset) {
  std::vector<std::uint32_t> m(n);
  for (std::uint32_t i = 0; i < n; ++i) m[i] = offset + i;
  return m;
}

std::vector<Poly> graph_ideal(const RationalMap& F, const RingPtr& wxy, std::uint32_t nx,
                              std::uint32_t ny) {
  std::vector<std::uint32_t> up = shift_map(nx, 1);
  std::vector<Poly> gens;
  for (const auto& a : F.source().ideal()) gens.push_back(transplant(a, wxy, up));
  Poly w = Poly::variable(wxy, 0);
  for (std::uint32_t j = 0; j < ny; ++j)
    gens.push_back(
        sub(Poly::variable(wxy, 1 + nx + j), mul(w, transplant(F.forms()[j], wxy, up))));
  return gens;
}

}  // namespace

ReesSystem::ReesSystem(const RationalMap& F)
    : xy_(make_xy_ring(F)), wxy_(xy_->with_prefix_block({"@w"})),
      nx_(F.source().ring()->nvars()), ny_(F.target().ring()->nvars()), degree_(F.degree()),
      state_(wxy_, graph_ideal(F, wxy_, nx_, ny_)) {
  if (!F.source().assume_domain())
    throw ValidationError("relation ideals are supported only over domain sources");
}

void ReesSystem::harvest() {
  // scan the raw accumulated basis, not the interreduced snapshot: elements
  // that later reductions make redundant are still honest relations
  std::vector<std::uint32_t> down(wxy_->nvars(), 0);
  for (std::uint32_t i = 0; i < nx_ + ny_; ++i) down[1 + i] = i;
  const std::vector<Poly>& raw = state_.working_basis();
  for (; harvested_ < raw.size(); ++harvested_) {
    const Poly& g = raw[harvested_];
    if (g.lead_exp()[0] != 0) continue;  // leading tag power: all tag-free terms beat it
    Poly h = transplant(g, xy_, down);
    auto bd = h.bidegree();
    if (!bd || bd->x != 1) continue;
    h = normalize(h);
    bool seen = false;
    for (const auto& p : pool_)
      if (p == h) {
        seen = true;
        break;
      }
    if (!seen) pool_.push_back(std::move(h));
  }
}

void ReesSystem::run_to(int N) {
  if (N < 1) throw ValidationError("truncation level must be at least 1");
  if (state_.exhausted() || (reached_ > 0 && N <= reached_)) {
    reached_ = std::max(reached_, N);
    return;
  }
  WeightCap cap;
  cap.w1.assign(wxy_->nvars(), 0);
  cap.w2.assign(wxy_->nvars(), 0);
  cap.w2[0] = 1;
  for (std::uint32_t i = 0; i < nx_; ++i) cap.w1[1 + i] = 1;
  for (std::uint32_t j = 0; j < ny_; ++j) {
    cap.w1[1 + nx_ + j] = degree_;
    cap.w2[1 + nx_ + j] = 1;
  }
  cap.max1 = 1 + std::uint64_t{degree_} * static_cast<std::uint64_t>(N);
  cap.max2 = static_cast<std::uint64_t>(N);
  state_.set_cap(std::move(cap));
  state_.run();
  reached_ = N;
  harvest();
}

void ReesSystem::run_full() {
  if (state_.exhausted()) return;
  state_.set_cap(std::nullopt);
  state_.run();
  harvest();
}

ReesChunk ReesSystem::chunk(std::string strategy) const {
  ReesChunk c;
  c.xy_ring = xy_;
  c.nx = nx_;
  c.full = state_.exhausted();
  c.truncated_to = reached_;
  c.strategy = std::move(strategy);

  std::vector<std::uint32_t> down(wxy_->nvars(), 0);
  for (std::uint32_t i = 0; i < nx_ + ny_; ++i) down[1 + i] = i;
  GroebnerBasis snap = state_.snapshot();
  for (const auto& g : snap.gens) {
    if (g.lead_exp()[0] != 0) continue;  // leading tag power: all tag-free terms beat it
    Poly h = transplant(g, xy_, down);
    auto bd = h.bidegree();
    if (!bd) throw Error("relation basis element is not bihomogeneous");
    c.gens.push_back(std::move(h));
    c.bidegs.push_back(*bd);
  }
  c.xlinear = pool_;
  return c;
}

StageSlot& stage_slot(const RationalMap& F) {
  auto cache = F.stage_cache();
  if (!cache) {
    cache = std::make_shared<StageSlot>();
    F.set_stage_cache(cache);
  }
  return *std::static_pointer_cast<StageSlot>(cache);
}

namespace {

std::shared_ptr<ReesSystem> system_of(const RationalMap& F) {
  StageSlot& slot = stage_slot(F);
  if (!slot.system) slot.system = std::make_shared<ReesSystem>(F);
  return slot.system;
}

}  // namespace

ReesChunk rees_full(const RationalMap& F) {
  auto sys = system_of(F);
  sys->run_full();
  return sys->chunk("rees");
}

ReesChunk rees_truncated(const RationalMap& F, int N) {
  auto sys = system_of(F);
  sys->run_to(N);
  return sys->chunk("simis");
}

ReesChunk rees_saturation(const RationalMap& F) {
  if (!F.source().assume_domain())
    throw ValidationError("relation ideals are supported only over domain sources");
  RingPtr xy = make_xy_ring(F);
  std::uint32_t nx = F.source().ring()->nvars();
  std::uint32_t ny = F.target().ring()->nvars();
  std::vector<std::uint32_t> up = shift_map(nx, 0);

  SyzygyMatrix syz = syzygies(F.forms(), F.source().ideal());
  std::vector<Poly> sym;
  for (const auto& col : syz.cols) {
    Poly rel = Poly::zero(xy);
    for (std::uint32_t j = 0; j < ny; ++j) {
      if (col[j].is_zero()) continue;
      rel = add(rel, mul(Poly::variable(xy, nx + j), transplant(col[j], xy, up)));
    }
    if (!rel.is_zero()) sym.push_back(std::move(rel));
  }
  for (const auto& a : F.source().ideal()) sym.push_back(transplant(a, xy, up));

  std::size_t k = 0;
  while (F.forms()[k].is_zero()) ++k;
  std::vector<Poly> sat = saturate(sym, transplant(F.forms()[k], xy, up));

  ReesChunk c;
  c.xy_ring = xy;
  c.nx = nx;
  c.full = true;
  c.strategy = "saturation";
  if (sat.empty()) return c;
  GroebnerBasis gb = buchberger(sat);
  for (const auto& g : gb.gens) {
    auto bd = g.bidegree();
    if (!bd) throw Error("relation basis element is not bihomogeneous");
    if (bd->x == 1) c.xlinear.push_back(normalize(g));
    c.gens.push_back(g);
    c.bidegs.push_back(*bd);
  }
  return c;
}

std::vector<Poly> linear_part(const ReesChunk& chunk) {
  std::vector<Poly> cands = chunk.xlinear;
  if (cands.empty())
    for (std::size_t i = 0; i < chunk.gens.size(); ++i)
      if (chunk.bidegs[i].x == 1) cands.push_back(chunk.gens[i]);
  // generators sitting deeper than y-degree 1 also contribute their
  // tail-reduced y-shifts: redundant relations never change the row space of
  // the dual matrix, but they hand the rank and minors searches alternative
  // rows, the way a basis kept without pruning would
  const RingPtr& xy = chunk.xy_ring;
  std::size_t base = cands.size();
  for (std::size_t i = 0; i < base; ++i) {
    if (cands[i].bidegree()->y < 2) continue;
    for (std::size_t k = chunk.nx; k < xy->nvars(); ++k) {
      Poly s = mul(Poly::variable(xy, k), cands[i]);
      Poly lead = Poly::monomial(xy, s.lead_coef(), ExpVec(s.lead_exp().begin(), s.lead_exp().end()));
      Poly h = normalize(add(lead, normal_form(sub(s, lead), chunk.gens)));
      bool seen = false;
      for (const auto& p : cands)
        if (p == h) {
          seen = true;
          break;
        }
      if (!seen) cands.push_back(std::move(h));
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Poly& a, const Poly& b) {
    long ya = a.bidegree()->y, yb = b.bidegree()->y;
    if (ya != yb) return ya < yb;
    return poly_cmp(a, b) < 0;
  });
  return cands;
}

}  // namespace birat
