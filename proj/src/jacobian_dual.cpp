#include "birat/jacobian_dual.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace birat {

namespace {

struct DualPrep {
  Represent rep;
  std::optional<RationalMap> fmin;  // engaged only when re-presentation happened
  std::shared_ptr<ReesChunk> sat;   // cached saturation-strategy basis
};

DualPrep& prep_of(const RationalMap& F) {
  StageSlot& slot = stage_slot(F);
  if (!slot.dual) {
    auto p = std::make_shared<DualPrep>();
    p->rep = minimal_representation(F.source());
    if (!p->rep.trivial) {
      std::vector<Poly> pushed;
      pushed.reserve(F.forms().size());
      for (const auto& f : F.forms()) pushed.push_back(p->rep.push(f));
      p->fmin = RationalMap(p->rep.minimal, F.target(), std::move(pushed));
    }
    slot.dual = p;
  }
  return *std::static_pointer_cast<DualPrep>(slot.dual);
}

Scalar draw_scalar(const Field& F, std::mt19937_64& rng) {
  if (F.kind() == FieldKind::prime)
    return F.from_int(static_cast<long>(rng() % F.characteristic()));
  return F.from_int(static_cast<long>(rng() % 61) - 30);
}

// random source point with at least one nonvanishing form; Y-coordinates of
// its image
std::optional<std::vector<Scalar>> sample_image_point(const JacobianDualMatrix& psi,
                                                      std::mt19937_64& rng) {
  if (!psi.can_sample || psi.sample_forms.empty()) return std::nullopt;
  const RingPtr& R = psi.sample_forms.front().ring();
  const Field& F = R->field();
  for (int tries = 0; tries < 40; ++tries) {
    std::vector<Scalar> p;
    p.reserve(R->nvars());
    for (std::uint32_t i = 0; i < R->nvars(); ++i) p.push_back(draw_scalar(F, rng));
    std::vector<Scalar> ys;
    ys.reserve(psi.sample_forms.size());
    bool any = false;
    for (const auto& f : psi.sample_forms) {
      ys.push_back(evaluate(f, p));
      if (!F.is_zero(ys.back())) any = true;
    }
    if (any) return ys;
  }
  return std::nullopt;
}

int scalar_rank(std::vector<std::vector<Scalar>> m, const Field& F) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!F.is_zero(m[i][c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Scalar inv = F.inv(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (F.is_zero(m[i][c])) continue;
      Scalar t = F.mul(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(t, m[r][j]));
    }
    ++r;
  }
  return static_cast<int>(r);
}

int sampled_rank(const JacobianDualMatrix& psi, std::mt19937_64& rng) {
  auto ys = sample_image_point(psi, rng);
  if (!ys) return -1;
  const Field& F = psi.target.ring()->field();
  std::vector<std::vector<Scalar>> m;
  m.reserve(psi.rows.size());
  for (const auto& row : psi.rows) {
    std::vector<Scalar> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(evaluate(e, *ys));
    m.push_back(std::move(r));
  }
  return scalar_rank(std::move(m), F);
}

std::uint64_t row_score(const std::vector<Poly>& row) {
  std::uint64_t s = 0;
  for (const auto& e : row)
    if (!e.is_zero()) s += e.total_degree() + 1;
  return s;
}

// pivot-and-cross-multiply elimination over the quotient by gb; entries kept
// in normal form so zero tests are plain
int rank_modulo(std::vector<std::vector<Poly>> m, const GroebnerBasis& gb) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  for (auto& row : m)
    for (auto& e : row) e = normal_form(e, gb);
  std::vector<bool> rdone(rows, false), cdone(cols, false);
  int rank = 0;
  for (;;) {
    std::size_t bi = rows, bj = cols;
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (rdone[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (cdone[j] || m[i][j].is_zero()) continue;
        std::uint64_t d = m[i][j].total_degree();
        if (bi == rows || d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows) return rank;
    ++rank;
    rdone[bi] = true;
    cdone[bj] = true;
    for (std::size_t i = 0; i < rows; ++i) {
      if (rdone[i] || m[i][bj].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (cdone[j]) continue;
        m[i][j] = normal_form(sub(mul(m[bi][bj], m[i][j]), mul(m[i][bj], m[bi][j])), gb);
      }
      m[i][bj] = Poly::zero(m[i][bj].ring());
    }
  }
}

}  // namespace

Poly poly_det(std::vector<std::vector<Poly>> m, const RingPtr& ring) {
  std::size_t n = m.size();
  if (n == 0) return Poly::constant(ring, ring->field().one());
  Poly prev = Poly::constant(ring, ring->field().one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      if (piv == n || m[i][k].total_degree() < m[piv][k].total_degree()) piv = i;
    }
    if (piv == n) return Poly::zero(ring);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j])), prev);
      m[i][k] = Poly::zero(ring);
    }
    prev = m[k][k];
  }
  return negate ? neg(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

std::vector<std::size_t> greedy_pick(const std::vector<std::uint64_t>& scores, std::size_t want,
                                     std::uint64_t jitter_seed) {
  std::mt19937_64 rng(jitter_seed);
  std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, std::size_t>> keyed;
  keyed.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) keyed.push_back({{scores[i], rng()}, i});
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < want && i < keyed.size(); ++i) out.push_back(keyed[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

bool rank_at_least(const JacobianDualMatrix& psi, std::uint32_t r, const DualOptions& opts) {
  if (r == 0) return true;
  if (r > psi.nrows() || r > psi.ncols) return false;
  std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + 1);
  auto say = [&](const std::string& s) {
    if (opts.trace) opts.trace(s);
  };

  if (opts.quick_rank && psi.can_sample) {
    for (int t = 0; t < 3; ++t) {
      int sr = sampled_rank(psi, rng);
      if (sr >= static_cast<int>(r)) {
        say("point evaluation certified rank " + std::to_string(r));
        return true;
      }
      if (sr < 0) break;
    }
  }

  const GroebnerBasis& gb = psi.target.groebner();
  std::vector<std::uint64_t> rscores;
  rscores.reserve(psi.rows.size());
  for (const auto& row : psi.rows) rscores.push_back(row_score(row));
  for (int attempt = 0; attempt < opts.attempts; ++attempt) {
    std::uint64_t salt = opts.seed * 1315423911ULL + static_cast<std::uint64_t>(attempt);
    auto ri = greedy_pick(rscores, r, salt);
    std::vector<std::uint64_t> cscores(psi.ncols, 0);
    for (std::uint32_t j = 0; j < psi.ncols; ++j)
      for (auto i : ri)
        if (!psi.rows[i][j].is_zero()) cscores[j] += psi.rows[i][j].total_degree() + 1;
    auto cj = greedy_pick(cscores, r, salt ^ 0x5bf03635ULL);
    std::vector<std::vector<Poly>> sub;
    sub.reserve(r);
    for (auto i : ri) {
      std::vector<Poly> row;
      row.reserve(r);
      for (auto j : cj) row.push_back(normal_form(psi.rows[i][j], gb));
      sub.push_back(std::move(row));
    }
    Poly det = poly_det(std::move(sub), psi.target.ring());
    if (!normal_form(det, gb).is_zero()) {
      say("found a nonvanishing " + std::to_string(r) + "-minor on draw " +
          std::to_string(attempt + 1));
      return true;
    }
  }
  return false;
}

int rank_over_target(const JacobianDualMatrix& psi, bool quick, std::uint64_t seed) {
  int maxr = static_cast<int>(std::min<std::uint32_t>(psi.nrows(), psi.ncols));
  if (maxr == 0) return 0;
  if (quick && psi.can_sample) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 2);
    for (int t = 0; t < 3; ++t)
      if (sampled_rank(psi, rng) == maxr) return maxr;
  }
  return rank_modulo(psi.rows, psi.target.groebner());
}

namespace {

JacobianDualMatrix build_psi(const ReesChunk& chunk, const RationalMap& G, const Represent& rep) {
  JacobianDualMatrix psi;
  psi.target = G.target();
  psi.xy_ring = chunk.xy_ring;
  psi.ncols = chunk.nx;
  psi.rep = rep;
  psi.sample_forms = G.forms();
  psi.can_sample = G.source().ambient_is_whole();
  psi.from_full_basis = chunk.full;
  psi.liftings = linear_part(chunk);

  const RingPtr& T = G.target().ring();
  std::vector<std::uint32_t> down(chunk.xy_ring->nvars(), 0);
  for (std::uint32_t j = 0; chunk.nx + j < chunk.xy_ring->nvars(); ++j) down[chunk.nx + j] = j;
  for (const auto& P : psi.liftings) {
    std::vector<Poly> row;
    row.reserve(chunk.nx);
    for (std::uint32_t i = 0; i < chunk.nx; ++i)
      row.push_back(transplant(derivative(P, i), T, down));
    psi.rows.push_back(std::move(row));
  }
  return psi;
}

}  // namespace

DualResult jacobian_dual(const RationalMap& F, const DualOptions& opts) {
  if (!F.source().assume_domain() || !F.target().assume_domain())
    throw ValidationError("the dual-matrix machinery needs domain source and target");
  if (opts.hybrid_limit < 1) throw ValidationError("hybrid limit must be at least 1");
  DualPrep& prep = prep_of(F);
  const RationalMap& G = prep.fmin ? *prep.fmin : F;
  auto say = [&](const std::string& s) {
    if (opts.trace) opts.trace(s);
  };
  if (prep.fmin)
    say("source re-presented on " + std::to_string(G.source().ring()->nvars()) +
        " coordinates");

  DualResult res;
  switch (opts.strategy) {
    case Strategy::rees: {
      say("computing the complete relation basis by elimination");
      res.psi = build_psi(rees_full(G), G, prep.rep);
      break;
    }
    case Strategy::saturation: {
      say("computing the complete relation basis from the syzygy presentation");
      if (!prep.sat) prep.sat = std::make_shared<ReesChunk>(rees_saturation(G));
      res.psi = build_psi(*prep.sat, G, prep.rep);
      break;
    }
    case Strategy::simis:
    case Strategy::hybrid: {
      int N = 1, inc = 1;
      for (int stage = 1;; ++stage) {
        if (opts.strategy == Strategy::simis && stage > opts.step_limit)
          throw StepLimitError("no rank certificate after " + std::to_string(opts.step_limit) +
                               " escalation stages");
        ReesChunk ch = rees_truncated(G, N);
        res.stages = stage;
        say("stage " + std::to_string(stage) + ": relations complete through y-degree " +
            std::to_string(N));
        res.psi = build_psi(ch, G, prep.rep);
        say("dual matrix has " + std::to_string(res.psi.nrows()) + " rows and " +
            std::to_string(res.psi.ncols) + " columns");
        if (ch.full) {
          say("relation basis finished during the stage");
          break;
        }
        if (rank_at_least(res.psi, res.psi.target_rank(), opts)) {
          res.rank_attained = true;
          break;
        }
        if (opts.strategy == Strategy::hybrid && N >= opts.hybrid_limit) {
          say("finishing the complete relation basis from the saved state");
          res.psi = build_psi(rees_full(G), G, prep.rep);
          break;
        }
        N += inc;
        ++inc;
      }
      break;
    }
  }
  if (res.psi.from_full_basis)
    say("dual matrix has " + std::to_string(res.psi.nrows()) + " rows and " +
        std::to_string(res.psi.ncols) + " columns (complete basis)");
  return res;
}

}  // namespace birat
