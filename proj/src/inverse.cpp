#include "birat/inverse.hpp"

#include <algorithm>

#include "birat/syzygy.hpp"

namespace birat {

namespace {

struct Pipeline {
  std::optional<RationalMap> onto;  // target replaced by the image, cached
};

DualOptions dual_options(const InverseOptions& o) {
  DualOptions d;
  d.strategy = o.strategy;
  d.hybrid_limit = o.hybrid_limit;
  d.step_limit = o.step_limit;
  d.quick_rank = o.quick_rank;
  d.seed = o.seed;
  d.trace = o.trace;
  return d;
}

void require_domains(const RationalMap& F) {
  if (!F.source().assume_domain() || !F.target().assume_domain())
    throw ValidationError("birationality needs domain source and target");
}

// target replaced by the closed image unless the caller vouches for
// dominance; cached per map so repeated queries share all downstream state
RationalMap onto_image(const RationalMap& F, const InverseOptions& o) {
  if (o.assume_dominant) return F;
  StageSlot& slot = stage_slot(F);
  if (!slot.pipeline) {
    auto p = std::make_shared<Pipeline>();
    if (o.trace) o.trace("computing the image ideal");
    const auto& img = F.image_ideal();
    if (img.empty()) {
      if (o.trace) o.trace("the map is dominant, keeping the declared target");
      p->onto = F;
    } else {
      if (o.trace) o.trace("replacing the target by the image");
      std::vector<Poly> gens = F.target().ideal();
      for (const auto& g : img) gens.push_back(g);
      p->onto = F.with_target(Variety(F.target().ring(), std::move(gens), true));
    }
    slot.pipeline = p;
  }
  return *std::static_pointer_cast<Pipeline>(slot.pipeline)->onto;
}

// exact decision once the relation basis is complete
bool decide_rank(const DualResult& dual, const InverseOptions& o) {
  std::uint32_t r = dual.psi.target_rank();
  if (dual.rank_attained) return true;
  DualOptions d = dual_options(o);
  if (o.quick_rank && rank_at_least(dual.psi, r, d)) return true;
  return rank_over_target(dual.psi, false, o.seed) == static_cast<int>(r);
}

std::optional<std::vector<Poly>> minors_inverse(const JacobianDualMatrix& psi, int draws,
                                                const InverseOptions& o) {
  std::uint32_t r = psi.target_rank();
  if (r == 0 || psi.nrows() < r) return std::nullopt;
  const GroebnerBasis& gb = psi.target.groebner();
  const RingPtr& T = psi.target.ring();
  std::vector<std::uint64_t> scores;
  scores.reserve(psi.rows.size());
  for (const auto& row : psi.rows) {
    std::uint64_t s = 0;
    for (const auto& e : row)
      if (!e.is_zero()) s += e.total_degree() + 1;
    scores.push_back(s);
  }
  for (int attempt = 0; attempt < draws; ++attempt) {
    std::uint64_t salt = o.seed * 2654435761ULL + static_cast<std::uint64_t>(attempt);
    auto ri = greedy_pick(scores, r, salt);
    std::vector<std::vector<Poly>> W;
    W.reserve(r);
    for (auto i : ri) {
      std::vector<Poly> row;
      row.reserve(psi.ncols);
      for (const auto& e : psi.rows[i]) row.push_back(normal_form(e, gb));
      W.push_back(std::move(row));
    }
    std::vector<Poly> g;
    g.reserve(psi.ncols);
    bool any = false;
    for (std::uint32_t drop = 0; drop < psi.ncols; ++drop) {
      std::vector<std::vector<Poly>> sq;
      sq.reserve(r);
      for (const auto& row : W) {
        std::vector<Poly> srow;
        srow.reserve(r);
        for (std::uint32_t j = 0; j < psi.ncols; ++j)
          if (j != drop) srow.push_back(row[j]);
        sq.push_back(std::move(srow));
      }
      Poly det = poly_det(std::move(sq), T);
      if (drop % 2 == 1) det = neg(det);
      det = normal_form(det, gb);
      if (!det.is_zero()) any = true;
      g.push_back(std::move(det));
    }
    if (!any) continue;
    if (o.trace)
      o.trace("inverse found from signed minors on draw " + std::to_string(attempt + 1));
    return g;
  }
  return std::nullopt;
}

std::vector<Poly> nullspace_inverse(const JacobianDualMatrix& psi, const InverseOptions& o) {
  if (o.trace) o.trace("computing the null space of the dual matrix");
  const GroebnerBasis& gb = psi.target.groebner();
  std::vector<std::vector<Poly>> columns;
  columns.reserve(psi.ncols);
  for (std::uint32_t i = 0; i < psi.ncols; ++i) {
    std::vector<Poly> col;
    col.reserve(psi.rows.size());
    for (const auto& row : psi.rows) col.push_back(row[i]);
    columns.push_back(std::move(col));
  }
  auto kernel = module_kernel(columns, psi.target.ideal());

  std::vector<std::vector<Poly>> valid;
  for (auto& tau : kernel) {
    long degree = -1;
    bool ok = true, all_zero = true;
    for (auto& c : tau) {
      c = normal_form(c, gb);
      if (c.is_zero()) continue;
      all_zero = false;
      if (!c.is_homogeneous()) {
        ok = false;
        break;
      }
      long d = static_cast<long>(c.total_degree());
      if (degree >= 0 && d != degree) {
        ok = false;
        break;
      }
      degree = d;
    }
    if (ok && !all_zero && degree > 0) valid.push_back(std::move(tau));
  }
  if (valid.empty()) throw Error("no usable null-space generator for the inverse");
  std::sort(valid.begin(), valid.end(),
            [](const std::vector<Poly>& a, const std::vector<Poly>& b) {
              auto deg = [](const std::vector<Poly>& v) {
                for (const auto& c : v)
                  if (!c.is_zero()) return c.total_degree();
                return std::uint32_t{0};
              };
              std::uint32_t da = deg(a), db = deg(b);
              if (da != db) return da < db;
              for (std::size_t i = 0; i < a.size(); ++i) {
                int c = poly_cmp(a[i], b[i]);
                if (c != 0) return c < 0;
              }
              return false;
            });
  if (o.trace)
    o.trace("null-space generator of degree " +
            std::to_string([&] {
              for (const auto& c : valid.front())
                if (!c.is_zero()) return c.total_degree();
              return std::uint32_t{0};
            }()) +
            " selected");
  return valid.front();
}

}  // namespace

bool is_birational(const RationalMap& F, const InverseOptions& opts) {
  require_domains(F);
  RationalMap G = onto_image(F, opts);
  DualResult dual = jacobian_dual(G, dual_options(opts));
  return decide_rank(dual, opts);
}

RationalMap inverse_of_map(const RationalMap& F, const InverseOptions& opts) {
  require_domains(F);
  if (opts.minors_count && *opts.minors_count < 0)
    throw ValidationError("minors draw count cannot be negative");
  RationalMap G = onto_image(F, opts);
  DualResult dual = jacobian_dual(G, dual_options(opts));
  if (opts.check_birational && !decide_rank(dual, opts))
    throw NotBirationalError("the map is not birational onto its image");

  int draws = opts.minors_count ? *opts.minors_count
                                : static_cast<int>(2 + dual.psi.ncols);
  std::optional<std::vector<Poly>> forms_min;
  if (draws > 0) forms_min = minors_inverse(dual.psi, draws, opts);
  if (!forms_min) forms_min = nullspace_inverse(dual.psi, opts);

  const Represent& rep = dual.psi.rep;
  std::vector<Poly> forms;
  if (rep.trivial) {
    forms = std::move(*forms_min);
  } else {
    const RingPtr& T = G.target().ring();
    const Field& k = T->field();
    forms.reserve(rep.coord_exprs.size());
    for (const auto& expr : rep.coord_exprs) {
      Poly s = Poly::zero(T);
      for (std::size_t j = 0; j < expr.size(); ++j) {
        if (k.is_zero(expr[j])) continue;
        s = add(s, scalar_mul(expr[j], (*forms_min)[j]));
      }
      forms.push_back(std::move(s));
    }
  }
  // one common scale across the tuple keeps the map and makes output canonical
  for (const Poly& f : forms) {
    if (f.is_zero()) continue;
    const Field& k = f.ring()->field();
    Scalar s = k.div(normalize(f).lead_coef(), f.lead_coef());
    if (!k.is_one(s))
      for (Poly& g : forms) g = scalar_mul(s, g);
    break;
  }
  return RationalMap(G.target(), F.source(), std::move(forms));
}

bool is_embedding(const RationalMap& F, const InverseOptions& opts) {
  require_domains(F);
  InverseOptions o = opts;
  if (!o.minors_count) o.minors_count = 0;
  if (o.trace) o.trace("checking that the map is regular");
  if (!F.is_regular()) return false;
  std::optional<RationalMap> inverse;
  try {
    inverse = inverse_of_map(F, o);
  } catch (const NotBirationalError&) {
    return false;
  }
  if (o.trace) o.trace("checking that the inverse is regular");
  return inverse->is_regular();
}

}  // namespace birat
