#include "birat/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace birat {

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  Poly p(ring);
  if (!ring->field().is_zero(c)) {
    ExpVec e(ring->nvars(), 0);
    p.append_term(c, e);
  }
  return p;
}

Poly Poly::monomial(RingPtr ring, const Scalar& c, ExpVec e) {
  Poly p(ring);
  if (e.size() != ring->nvars()) throw ValidationError("monomial exponent size mismatch");
  if (!ring->field().is_zero(c)) p.append_term(c, e);
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t v, Exp e) {
  ExpVec m(ring->nvars(), 0);
  m[v] = e;
  return monomial(ring, ring->field().one(), std::move(m));
}

void Poly::append_term(const Scalar& c, ExpSpan e) {
  coef_.push_back(c);
  exp_.insert(exp_.end(), e.begin(), e.end());
}

void Poly::canonicalize() {
  std::size_t n = coef_.size();
  if (n == 0) return;
  std::size_t nv = ring_->nvars();
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const Ring& R = *ring_;
  const Exp* base = exp_.data();
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    return R.cmp(ExpSpan(base + a * nv, nv), ExpSpan(base + b * nv, nv)) > 0;
  });
  std::vector<Scalar> nc;
  std::vector<Exp> ne;
  nc.reserve(n);
  ne.reserve(n * nv);
  const Field& F = R.field();
  std::size_t i = 0;
  while (i < n) {
    ExpSpan m(base + idx[i] * nv, nv);
    Scalar acc = coef_[idx[i]];
    std::size_t j = i + 1;
    while (j < n && R.cmp(ExpSpan(base + idx[j] * nv, nv), m) == 0) {
      acc = F.add(acc, coef_[idx[j]]);
      ++j;
    }
    if (!F.is_zero(acc)) {
      nc.push_back(std::move(acc));
      ne.insert(ne.end(), m.begin(), m.end());
    }
    i = j;
  }
  coef_ = std::move(nc);
  exp_ = std::move(ne);
}

bool Poly::operator==(const Poly& o) const {
  if (coef_.size() != o.coef_.size()) return false;
  if (coef_.empty()) return true;
  if (*ring_ != *o.ring_) return false;
  return exp_ == o.exp_ && coef_ == o.coef_;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < nterms(); ++i) d = std::max(d, ring_->total_degree(exp(i)));
  return d;
}

bool Poly::is_homogeneous() const {
  if (is_zero()) return true;
  std::uint32_t d = ring_->total_degree(exp(0));
  for (std::size_t i = 1; i < nterms(); ++i)
    if (ring_->total_degree(exp(i)) != d) return false;
  return true;
}

std::optional<Bideg> Poly::bidegree() const {
  if (is_zero()) return std::nullopt;
  Bideg d = ring_->bidegree(exp(0));
  for (std::size_t i = 1; i < nterms(); ++i)
    if (!(ring_->bidegree(exp(i)) == d)) return std::nullopt;
  return d;
}

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
  if (a.ring().get() != b.ring().get() && *a.ring() != *b.ring())
    throw RingMismatchError("operands live in different rings");
}

// merge two descending term streams
Poly merge(const Poly& a, bool negate_b, const Poly& b, const Scalar* bc = nullptr,
           ExpSpan bm = {}) {
  // when bc/bm given, stream b is scaled by bc (already negated if wanted) and
  // shifted by monomial bm
  const RingPtr& ring = a.ring() ? a.ring() : b.ring();
  const Ring& R = *ring;
  const Field& F = R.field();
  Poly out(ring);
  std::size_t i = 0, j = 0;
  ExpVec tmp(R.nvars());
  auto b_exp = [&](std::size_t t) -> ExpSpan {
    ExpSpan e = b.exp(t);
    if (bm.empty()) return e;
    for (std::size_t v = 0; v < tmp.size(); ++v) tmp[v] = static_cast<Exp>(e[v] + bm[v]);
    return ExpSpan(tmp);
  };
  auto b_coef = [&](std::size_t t) -> Scalar {
    Scalar c = b.coef(t);
    if (bc) c = F.mul(*bc, c);
    if (negate_b) c = F.neg(c);
    return c;
  };
  while (i < a.nterms() && j < b.nterms()) {
    ExpSpan ea = a.exp(i), eb = b_exp(j);
    int c = R.cmp(ea, eb);
    if (c > 0) {
      out.append_term(a.coef(i), ea);
      ++i;
    } else if (c < 0) {
      out.append_term(b_coef(j), eb);
      ++j;
    } else {
      Scalar s = F.add(a.coef(i), b_coef(j));
      if (!F.is_zero(s)) out.append_term(s, ea);
      ++i;
      ++j;
    }
  }
  for (; i < a.nterms(); ++i) out.append_term(a.coef(i), a.exp(i));
  for (; j < b.nterms(); ++j) out.append_term(b_coef(j), b_exp(j));
  return out;
}

}  // namespace

Poly add(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  require_same_ring(a, b);
  return merge(a, false, b);
}

Poly sub(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return neg(b);
  require_same_ring(a, b);
  return merge(a, true, b);
}

Poly neg(const Poly& a) {
  Poly out(a.ring());
  const Field& F = a.ring()->field();
  for (std::size_t i = 0; i < a.nterms(); ++i) out.append_term(F.neg(a.coef(i)), a.exp(i));
  return out;
}

Poly scalar_mul(const Scalar& c, const Poly& a) {
  const Field& F = a.ring()->field();
  if (F.is_zero(c)) return Poly::zero(a.ring());
  Poly out(a.ring());
  for (std::size_t i = 0; i < a.nterms(); ++i) out.append_term(F.mul(c, a.coef(i)), a.exp(i));
  return out;
}

Poly term_mul(const Scalar& c, ExpSpan m, const Poly& a) {
  const Field& F = a.ring()->field();
  if (F.is_zero(c)) return Poly::zero(a.ring());
  Poly out(a.ring());
  ExpVec tmp(a.ring()->nvars());
  for (std::size_t i = 0; i < a.nterms(); ++i) {
    ExpSpan e = a.exp(i);
    for (std::size_t v = 0; v < tmp.size(); ++v) tmp[v] = static_cast<Exp>(e[v] + m[v]);
    out.append_term(F.mul(c, a.coef(i)), tmp);
  }
  return out;
}

Poly reduce_step(const Poly& a, const Scalar& c, ExpSpan m, const Poly& b) {
  require_same_ring(a, b);
  Scalar nc = a.ring()->field().neg(c);
  return merge(a, false, b, &nc, m);
}

Poly mul(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.ring());
  // multiply the shorter operand against the longer one
  const Poly& s = a.nterms() <= b.nterms() ? a : b;
  const Poly& l = a.nterms() <= b.nterms() ? b : a;
  Poly acc(a.ring());
  for (std::size_t i = 0; i < s.nterms(); ++i) {
    Poly part = term_mul(s.coef(i), s.exp(i), l);
    for (std::size_t t = 0; t < part.nterms(); ++t) acc.append_term(part.coef(t), part.exp(t));
  }
  acc.canonicalize();
  return acc;
}

Poly pow(const Poly& a, unsigned long e) {
  Poly r = Poly::constant(a.ring(), a.ring()->field().one());
  Poly base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    if (e >>= 1) base = mul(base, base);
  }
  return r;
}

Poly exact_div(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw Error("division by zero polynomial");
  const Field& F = a.ring()->field();
  Poly rem = a;
  Poly quot(a.ring());
  while (!rem.is_zero()) {
    if (!mono_divides(b.lead_exp(), rem.lead_exp()))
      throw Error("exact polynomial division failed");
    Scalar c = F.div(rem.lead_coef(), b.lead_coef());
    ExpVec m = mono_div(rem.lead_exp(), b.lead_exp());
    quot.append_term(c, m);
    rem = reduce_step(rem, c, m, b);
  }
  // terms were appended in descending order already
  return quot;
}

Poly derivative(const Poly& a, std::size_t var) {
  const Field& F = a.ring()->field();
  Poly out(a.ring());
  ExpVec tmp(a.ring()->nvars());
  for (std::size_t i = 0; i < a.nterms(); ++i) {
    ExpSpan e = a.exp(i);
    if (e[var] == 0) continue;
    std::copy(e.begin(), e.end(), tmp.begin());
    Scalar c = F.mul(a.coef(i), F.from_int(static_cast<long>(e[var])));
    tmp[var] = static_cast<Exp>(tmp[var] - 1);
    if (!F.is_zero(c)) out.append_term(c, tmp);
  }
  out.canonicalize();
  return out;
}

Poly substitute(const Poly& a, const std::vector<Poly>& images) {
  if (images.size() != a.ring()->nvars())
    throw ValidationError("substitution needs one image per variable");
  RingPtr to;
  for (const auto& im : images) {
    if (!im.ring()) continue;
    if (!to)
      to = im.ring();
    else if (to.get() != im.ring().get() && *to != *im.ring())
      throw RingMismatchError("substitution images live in different rings");
  }
  if (!to) throw ValidationError("substitution images carry no ring");
  const Field& F = to->field();

  // power ladders, built on demand
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, Exp e) -> const Poly& {
    auto& lad = powers[v];
    if (lad.empty()) lad.push_back(Poly::constant(to, F.one()));
    while (lad.size() <= e) lad.push_back(mul(lad.back(), images[v]));
    return lad[e];
  };

  Poly acc(to);
  for (std::size_t i = 0; i < a.nterms(); ++i) {
    ExpSpan e = a.exp(i);
    Poly t = Poly::constant(to, a.coef(i));
    for (std::size_t v = 0; v < e.size() && !t.is_zero(); ++v)
      if (e[v]) t = mul(t, power(v, e[v]));
    for (std::size_t k = 0; k < t.nterms(); ++k) acc.append_term(t.coef(k), t.exp(k));
  }
  acc.canonicalize();
  return acc;
}

Scalar evaluate(const Poly& a, const std::vector<Scalar>& point) {
  if (point.size() != a.ring()->nvars()) throw ValidationError("evaluation point size mismatch");
  const Field& F = a.ring()->field();
  Scalar acc = F.zero();
  for (std::size_t i = 0; i < a.nterms(); ++i) {
    Scalar t = a.coef(i);
    ExpSpan e = a.exp(i);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) t = F.mul(t, F.pow(point[v], e[v]));
    acc = F.add(acc, t);
  }
  return acc;
}

Poly transplant(const Poly& a, const RingPtr& to, const std::vector<std::uint32_t>& var_map) {
  Poly out(to);
  ExpVec tmp(to->nvars());
  for (std::size_t i = 0; i < a.nterms(); ++i) {
    std::fill(tmp.begin(), tmp.end(), 0);
    ExpSpan e = a.exp(i);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      tmp[var_map[v]] = static_cast<Exp>(tmp[var_map[v]] + e[v]);
    }
    out.append_term(a.coef(i), tmp);
  }
  out.canonicalize();
  return out;
}

Poly normalize(const Poly& a) {
  if (a.is_zero()) return a;
  const Field& F = a.ring()->field();
  if (F.kind() == FieldKind::prime) return scalar_mul(F.inv(a.lead_coef()), a);
  // rationals: clear denominators, divide by integer content, positive lead
  mpz_class den_lcm = 1;
  for (std::size_t i = 0; i < a.nterms(); ++i)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.coef(i).rat().get_den_mpz_t());
  mpz_class content = 0;
  for (std::size_t i = 0; i < a.nterms(); ++i) {
    mpz_class num = a.coef(i).rat().get_num() * (den_lcm / a.coef(i).rat().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  mpq_class factor(den_lcm, content);
  factor.canonicalize();
  if (sgn(a.lead_coef().rat()) < 0) factor = -factor;
  return scalar_mul(Scalar(factor), a);
}

int poly_cmp(const Poly& a, const Poly& b) {
  const Ring& R = *a.ring();
  std::size_t n = std::min(a.nterms(), b.nterms());
  for (std::size_t i = 0; i < n; ++i) {
    int c = R.cmp(a.exp(i), b.exp(i));
    if (c != 0) return c;
  }
  if (a.nterms() != b.nterms()) return a.nterms() < b.nterms() ? -1 : 1;
  const Field& F = R.field();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coef(i) != b.coef(i)) return F.to_string(a.coef(i)) < F.to_string(b.coef(i)) ? -1 : 1;
  }
  return 0;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  const Field& F = ring_->field();
  std::string out;
  for (std::size_t i = 0; i < nterms(); ++i) {
    std::string cs = F.to_string(coef_[i]);
    bool negative = !cs.empty() && cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    ExpSpan e = exp(i);
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const std::vector<Poly>& gens) {
  std::string out = "ideal(";
  bool any = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (any) out += ", ";
    out += g.to_string();
    any = true;
  }
  if (!any) out += "0";
  out += ")";
  return out;
}

}  // namespace birat
