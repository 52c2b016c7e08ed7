#include "birat/rational_map.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "birat/ideal_ops.hpp"
#include "birat/syzygy.hpp"

namespace birat {

namespace {

void require_ring(const Poly& f, const RingPtr& r, const char* what) {
  if (f.ring().get() != r.get() && *f.ring() != *r) throw RingMismatchError(what);
}

void sort_ideal_gens(const RingPtr& r, std::vector<Poly>& gens) {
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    int c = r->cmp(a.lead_exp(), b.lead_exp());
    if (c != 0) return c < 0;
    return poly_cmp(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

}  // namespace

RationalMap::RationalMap(Variety source, Variety target, std::vector<Poly> forms) {
  if (!source.valid() || !target.valid())
    throw ValidationError("rational map needs source and target presentations");
  const RingPtr& R = source.ring();
  const RingPtr& T = target.ring();
  if (!(R->field() == T->field()))
    throw RingMismatchError("source and target use different coefficient fields");
  if (forms.size() != T->nvars())
    throw ValidationError("expected " + std::to_string(T->nvars()) + " defining forms, got " +
                          std::to_string(forms.size()));

  long degree = -1;
  for (const auto& f : forms) {
    require_ring(f, R, "defining form lives outside the source ring");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw ValidationError("defining form is not homogeneous");
    long d = static_cast<long>(f.total_degree());
    if (degree >= 0 && d != degree)
      throw ValidationError("defining forms have different degrees");
    degree = d;
  }

  bool any = false;
  for (auto& f : forms) {
    f = source.reduce(f);
    if (!f.is_zero()) any = true;
  }
  if (!any) throw ValidationError("every defining form vanishes on the source");

  for (const auto& b : target.ideal()) {
    if (!source.contains_poly(substitute(b, forms)))
      throw ValidationError("the image is not contained in the target variety");
  }

  d_ = std::make_shared<Data>(
      Data{std::move(source), std::move(target), std::move(forms),
           static_cast<std::uint32_t>(degree), nullptr, nullptr});
}

const std::vector<Poly>& RationalMap::image_ideal() const {
  if (d_->image) return *d_->image;
  const Variety& src = d_->source;
  const Variety& tgt = d_->target;
  const RingPtr& R = src.ring();
  const RingPtr& T = tgt.ring();
  std::uint32_t nx = R->nvars();
  std::uint32_t ny = T->nvars();

  std::vector<std::string> xnames = R->names();
  std::unordered_set<std::string> used(xnames.begin(), xnames.end());
  std::vector<std::string> ynames;
  ynames.reserve(ny);
  for (const auto& n : T->names()) {
    std::string c = n;
    while (used.count(c)) c += "'";
    used.insert(c);
    ynames.push_back(std::move(c));
  }
  RingPtr joint = Ring::bigraded(R->field(), xnames, ynames);

  std::vector<std::uint32_t> up(nx);
  for (std::uint32_t i = 0; i < nx; ++i) up[i] = i;
  std::vector<Poly> gens;
  for (const auto& a : src.ideal()) gens.push_back(transplant(a, joint, up));
  for (std::uint32_t j = 0; j < ny; ++j)
    gens.push_back(sub(Poly::variable(joint, nx + j), transplant(d_->forms[j], joint, up)));

  std::vector<std::uint32_t> drop(nx);
  for (std::uint32_t i = 0; i < nx; ++i) drop[i] = i;
  std::vector<Poly> survivors = eliminate(gens, drop);

  std::vector<std::uint32_t> down(nx + ny, 0);
  for (std::uint32_t j = 0; j < ny; ++j) down[nx + j] = j;
  std::vector<Poly> out;
  for (const auto& g : survivors) {
    Poly h = tgt.reduce(transplant(g, T, down));
    if (!h.is_zero()) out.push_back(normalize(h));
  }
  sort_ideal_gens(T, out);
  d_->image = std::make_shared<const std::vector<Poly>>(std::move(out));
  return *d_->image;
}

bool RationalMap::is_dominant() const { return image_ideal().empty(); }

bool RationalMap::same_map(const RationalMap& other) const {
  if (!d_->source.same_presentation(other.d_->source) ||
      !d_->target.same_presentation(other.d_->target))
    throw ValidationError("map comparison needs identical source and target presentations");
  const auto& f = d_->forms;
  const auto& g = other.d_->forms;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      Poly cross = sub(mul(f[i], g[j]), mul(f[j], g[i]));
      if (!d_->source.contains_poly(cross)) return false;
    }
  return true;
}

std::vector<Poly> RationalMap::base_locus(bool saturate_output) const {
  const Variety& src = d_->source;
  if (!src.assume_domain())
    throw ValidationError("base locus is supported only over domain sources");
  const RingPtr& R = src.ring();
  const auto& forms = d_->forms;

  std::size_t k = 0;
  while (forms[k].is_zero()) ++k;
  const Poly& fk = forms[k];

  std::vector<Poly> K{fk};
  for (const auto& a : src.ideal()) K.push_back(a);
  std::vector<Poly> nonzero;
  for (const auto& f : forms)
    if (!f.is_zero()) nonzero.push_back(f);
  std::vector<Poly> J = ideal_quotient(K, nonzero);

  std::optional<QuotientDivider> div;
  if (!src.ideal().empty()) div.emplace(fk, src.ideal());

  std::vector<Poly> coords;
  for (const auto& g : J) {
    Poly gr = src.reduce(g);
    if (gr.is_zero()) continue;
    for (const auto& f : nonzero) {
      Poly num = mul(gr, f);
      Poly q;
      if (div) {
        auto lifted = div->divide(num);
        if (!lifted) throw Error("coordinate of a map representative failed to divide out");
        q = std::move(*lifted);
      } else {
        q = exact_div(num, fk);
      }
      q = src.reduce(q);
      if (!q.is_zero()) coords.push_back(normalize(q));
    }
  }

  if (saturate_output) {
    std::vector<Poly> full = coords;
    for (const auto& a : src.ideal()) full.push_back(a);
    std::vector<Poly> sat = saturate(full, irrelevant_ideal(R));
    coords.clear();
    for (const auto& s : sat) {
      Poly r = src.reduce(s);
      if (!r.is_zero()) coords.push_back(normalize(r));
    }
  }
  sort_ideal_gens(R, coords);
  return coords;
}

bool RationalMap::is_regular() const {
  std::vector<Poly> gens = base_locus(true);
  for (const auto& a : d_->source.ideal()) gens.push_back(a);
  return is_unit_ideal(buchberger(gens));
}

RationalMap RationalMap::compose(const RationalMap& then) const {
  if (!d_->target.same_presentation(then.d_->source))
    throw ValidationError("composition needs the first target to equal the second source");
  std::vector<Poly> h;
  h.reserve(then.d_->forms.size());
  for (const auto& g : then.d_->forms) h.push_back(substitute(g, d_->forms));
  return RationalMap(d_->source, then.d_->target, std::move(h));
}

RationalMap RationalMap::with_target(Variety target) const {
  if (!(*target.ring() == *d_->target.ring()))
    throw RingMismatchError("replacement target lives in a different ambient space");
  return RationalMap(d_->source, std::move(target), d_->forms);
}

RationalMap RationalMap::identity(const Variety& v) {
  std::vector<Poly> vars;
  vars.reserve(v.ring()->nvars());
  for (std::uint32_t i = 0; i < v.ring()->nvars(); ++i)
    vars.push_back(Poly::variable(v.ring(), i));
  return RationalMap(v, v, std::move(vars));
}

std::shared_ptr<void> RationalMap::stage_cache() const { return d_->stage; }

void RationalMap::set_stage_cache(std::shared_ptr<void> cache) const {
  d_->stage = std::move(cache);
}

}  // namespace birat
