// End-to-end checks, one per release criterion. Each prints a PASS/FAIL
// line with its runtime; the binary exits nonzero when any check fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "birat/commands.hpp"
#include "birat/expr.hpp"
#include "birat/ideal_ops.hpp"
#include "birat/inverse.hpp"

using namespace birat;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Outcome {
  bool pass = false;
  std::string note;
};

template <class Body>
void criterion(int id, const char* name, Body&& body) {
  auto t0 = Clock::now();
  Outcome oc;
  try {
    oc = body();
  } catch (const std::exception& e) {
    oc.pass = false;
    oc.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("criterion %d %s (%.2fs) %s%s%s\n", id, oc.pass ? "PASS" : "FAIL", secs, name,
              oc.note.empty() ? "" : ": ", oc.note.c_str());
  std::fflush(stdout);
  if (!oc.pass) ++failures;
}

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

RingPtr qq(std::vector<std::string> n) { return Ring::standard(Field::rationals(), std::move(n)); }

std::vector<Poly> gens(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(parse_poly(r, t));
  return out;
}

RationalMap self_map(const RingPtr& r, const std::vector<std::string>& forms) {
  Variety pn = Variety::projective_space(r);
  return RationalMap(pn, pn, gens(r, forms));
}

RationalMap quintic_map() {
  RingPtr r = qq({"x", "y", "z", "t", "u"});
  return self_map(r, {"x^5", "y*x^4", "z*x^4 + y^5", "t*x^4 + z^5", "u*x^4 + t^5"});
}

RationalMap gabber_map(int n, int d, std::uint32_t p) {
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  RingPtr r = Ring::standard(Field::prime(p), names);
  std::vector<Poly> vars;
  for (int i = 0; i <= n; ++i) vars.push_back(Poly::variable(r, i));
  Poly lead = pow(vars[0], d - 1);
  std::vector<Poly> forms = {mul(vars[0], lead), mul(vars[1], lead)};
  for (int i = 2; i <= n; ++i) forms.push_back(add(mul(vars[i], lead), pow(vars[i - 1], d)));
  Variety pn = Variety::projective_space(r);
  return RationalMap(pn, pn, std::move(forms));
}

// base locus through homomorphisms: a vector orthogonal to every syzygy of
// the forms is another representative of the map; the base ideal is the sum
// of the coordinate ideals over generators of that kernel
std::vector<Poly> hom_base_locus(const RationalMap& F) {
  const std::vector<Poly>& rel = F.source().ideal();
  SyzygyMatrix syz = syzygies(F.forms(), rel);
  std::size_t m = F.forms().size();
  std::vector<std::vector<Poly>> rows(m);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& col : syz.cols) rows[i].push_back(col[i]);
  std::vector<std::vector<Poly>> ker = module_kernel(rows, rel);
  std::vector<Poly> sum;
  for (const auto& tau : ker)
    for (const Poly& g : tau) {
      Poly red = F.source().reduce(g);
      if (!red.is_zero()) sum.push_back(red);
    }
  return sum;
}

bool base_loci_agree(const RationalMap& F) {
  const RingPtr& r = F.source().ring();
  std::vector<Poly> irr = irrelevant_ideal(r);
  std::vector<Poly> colon = F.base_locus(true);
  std::vector<Poly> viahom = hom_base_locus(F);
  for (const Poly& g : F.source().ideal()) {
    colon.push_back(g);
    viahom.push_back(g);
  }
  return same_ideal(saturate(colon, irr), saturate(viahom, irr));
}

Outcome strategy_agreement(const RationalMap& F) {
  ReesChunk full = rees_full(F);
  ReesChunk sat = rees_saturation(F);
  if (!same_ideal(full.gens, sat.gens)) return {false, "elimination and saturation differ"};

  GroebnerBasis gb{full.xy_ring, full.gens, true, std::nullopt};
  ReesChunk part = rees_truncated(F, 2);
  for (const Poly& g : part.gens)
    if (!normal_form(g, gb).is_zero()) return {false, "truncated element outside the ideal"};

  InverseOptions base;
  RationalMap ref = inverse_of_map(F, base);
  for (Strategy s :
       {Strategy::rees, Strategy::simis, Strategy::hybrid, Strategy::saturation}) {
    InverseOptions o;
    o.strategy = s;
    if (!inverse_of_map(F, o).same_map(ref)) return {false, "strategies disagree"};
  }
  return {true, ""};
}

}  // namespace

int main() {
  criterion(1, "base locus golden value", [] {
    auto t0 = Clock::now();
    RingPtr r = qq({"x", "y", "z"});
    RationalMap F = self_map(r, {"x^2*y", "x^2*z", "x*y*z"});
    std::string got = to_string(F.base_locus(true));
    if (got != "ideal(y*z, x*z, x*y)") return Outcome{false, "got " + got};
    if (since(t0) >= 5.0) return Outcome{false, "over the 5s budget"};
    return Outcome{true, ""};
  });

  criterion(2, "quintic transformation inverts and round-trips", [] {
    auto t0 = Clock::now();
    RationalMap F = quintic_map();
    if (!is_birational(F)) return Outcome{false, "not recognized as birational"};
    RationalMap inv = inverse_of_map(F);  // hybrid default
    RationalMap id = RationalMap::identity(F.source());
    if (!F.compose(inv).same_map(id)) return Outcome{false, "forward round trip failed"};
    if (!inv.compose(F).same_map(id)) return Outcome{false, "backward round trip failed"};
    if (since(t0) >= 300.0) return Outcome{false, "over the 300s budget"};
    return Outcome{true, ""};
  });

  criterion(3, "quintic dual matrix shape and rank", [] {
    RationalMap F = quintic_map();
    DualResult dr = jacobian_dual(F);
    const JacobianDualMatrix& psi = dr.psi;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%u rows, %u columns", static_cast<unsigned>(psi.nrows()),
                  psi.ncols);
    if (psi.ncols != 5) return Outcome{false, std::string(buf)};
    if (psi.nrows() < 15 || psi.nrows() > 30) return Outcome{false, std::string(buf)};
    int rank = rank_over_target(psi, true, 0);
    if (rank != 4)
      return Outcome{false, std::string(buf) + ", rank " + std::to_string(rank)};
    return Outcome{true, std::string(buf) + ", rank 4"};
  });

  criterion(4, "benchmark family reaches the sharp inverse degree", [] {
    for (int d = 2; d <= 5; ++d) {
      auto t0 = Clock::now();
      RationalMap g = gabber_map(3, d, 101);
      InverseOptions o;
      o.assume_dominant = true;
      o.check_birational = false;
      o.minors_count = 0;
      RationalMap inv = inverse_of_map(g, o);
      unsigned expect = static_cast<unsigned>(d * d);
      if (inv.degree() != expect)
        return Outcome{false, "d=" + std::to_string(d) + " gave degree " +
                                  std::to_string(inv.degree())};
      if (since(t0) >= 120.0)
        return Outcome{false, "d=" + std::to_string(d) + " over the 120s budget"};
    }
    return Outcome{true, "degrees 4, 9, 16, 25"};
  });

  criterion(5, "strategies agree across the sample suite", [] {
    std::vector<std::pair<std::string, RationalMap>> suite;
    RingPtr p2 = qq({"x", "y", "z"});
    suite.emplace_back("cremona", self_map(p2, {"y*z", "x*z", "x*y"}));
    suite.emplace_back("cremona-thick", self_map(p2, {"x^2*y", "x^2*z", "x*y*z"}));

    RingPtr s2 = qq({"s", "t"});
    RingPtr a3 = qq({"a", "b", "c"});
    suite.emplace_back("conic",
                       RationalMap(Variety::projective_space(s2), Variety::projective_space(a3),
                                   gens(s2, {"s^2", "s*t", "t^2"})));
    RingPtr p4 = qq({"a", "b", "c", "d"});
    suite.emplace_back("twisted-cubic",
                       RationalMap(Variety::projective_space(s2), Variety::projective_space(p4),
                                   gens(s2, {"s^3", "s^2*t", "s*t^2", "t^3"})));

    suite.emplace_back("gabber-3-2", gabber_map(3, 2, 101));
    suite.emplace_back("gabber-3-3", gabber_map(3, 3, 101));
    suite.emplace_back("quintic", quintic_map());

    RingPtr p3 = qq({"x", "y", "z", "w"});
    suite.emplace_back("space-cremona", self_map(p3, {"y*z*w", "x*z*w", "x*y*w", "x*y*z"}));

    for (auto& [name, F] : suite) {
      Outcome oc = strategy_agreement(F);
      if (!oc.pass) return Outcome{false, name + ": " + oc.note};
    }
    return Outcome{true, "8 maps"};
  });

  criterion(6, "projection to the line is rejected", [] {
    RingPtr r = qq({"x", "y", "z"});
    SessionScript s = parse_script(
        "ring P2 = QQ[x, y, z];\n"
        "ring P1 = QQ[a, b];\n"
        "map pr : P2 -> P1 = [x, y];\n"
        "is-birational pr;\n"
        "inverse pr;\n");
    RationalMap pr(Variety::projective_space(r),
                   Variety::projective_space(qq({"a", "b"})), gens(r, {"x", "y"}));
    if (is_birational(pr)) return Outcome{false, "claimed birational"};
    CommandOptions o;
    CommandReport bi = run_command(s, s.commands[0], o);
    if (bi.exit_code != 2 || bi.out != "false\n")
      return Outcome{false, "is-birational exit " + std::to_string(bi.exit_code)};
    CommandReport inv = run_command(s, s.commands[1], o);
    if (inv.exit_code != 2)
      return Outcome{false, "inverse exit " + std::to_string(inv.exit_code)};
    return Outcome{true, ""};
  });

  criterion(7, "embedding suite", [] {
    RingPtr s2 = qq({"s", "t"});

    auto t0 = Clock::now();
    RationalMap tc(Variety::projective_space(s2),
                   Variety::projective_space(qq({"a", "b", "c", "d"})),
                   gens(s2, {"s^3", "s^2*t", "s*t^2", "t^3"}));
    if (!is_embedding(tc)) return Outcome{false, "twisted cubic rejected"};
    if (since(t0) >= 60.0) return Outcome{false, "twisted cubic over the 60s budget"};

    t0 = Clock::now();
    RingPtr p2 = qq({"x", "y", "z"});
    RationalMap ver(Variety::projective_space(p2),
                    Variety::projective_space(qq({"a", "b", "c", "d", "e", "f"})),
                    gens(p2, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}));
    if (!is_embedding(ver)) return Outcome{false, "quadratic embedding of the plane rejected"};
    if (since(t0) >= 60.0) return Outcome{false, "plane embedding over the 60s budget"};

    t0 = Clock::now();
    RationalMap cr = self_map(p2, {"y*z", "x*z", "x*y"});
    if (is_embedding(cr)) return Outcome{false, "base-point map accepted"};
    if (since(t0) >= 60.0) return Outcome{false, "involution over the 60s budget"};
    return Outcome{true, ""};
  });

  criterion(8, "colon and homomorphism base loci agree on singular sources", [] {
    RingPtr c4 = qq({"a", "b", "c", "d"});
    Variety cone(c4, gens(c4, {"a*c - b^2"}));  // vertex singularity
    RingPtr t3 = qq({"u", "v", "w"});
    Variety p2t = Variety::projective_space(t3);

    std::vector<std::pair<std::string, RationalMap>> suite;
    suite.emplace_back("vertex-projection", RationalMap(cone, p2t, gens(c4, {"a", "b", "c"})));
    suite.emplace_back("edge-projection", RationalMap(cone, p2t, gens(c4, {"a", "b", "d"})));
    suite.emplace_back("far-projection", RationalMap(cone, p2t, gens(c4, {"b", "c", "d"})));
    suite.emplace_back("regular-projection",
                       RationalMap(cone, p2t, gens(c4, {"a + d", "b", "c - d"})));

    RingPtr q3 = Ring::standard(Field::prime(101), {"x", "y", "z"});
    Variety cusp(q3, gens(q3, {"x^4 - y^3*z"}));  // singular at (0 : 0 : 1)
    RingPtr l2 = Ring::standard(Field::prime(101), {"a", "b"});
    suite.emplace_back("cusp-projection",
                       RationalMap(cusp, Variety::projective_space(l2), gens(q3, {"x", "y"})));

    for (auto& [name, F] : suite)
      if (!base_loci_agree(F)) return Outcome{false, name + " disagrees"};
    return Outcome{true, "5 maps"};
  });

  criterion(9, "property suites", [] {
    // S-pair completeness on random ideals
    std::mt19937 rng(321);
    RingPtr r = Ring::standard(Field::prime(101), {"x", "y", "z"});
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Poly> g;
      for (int i = 0; i < 3; ++i) {
        Poly f(r);
        for (int t = 0; t < 3; ++t) {
          ExpVec e(3, 0);
          std::uniform_int_distribution<int> ev(0, 2);
          for (int k = 0; k < 3; ++k) e[k] = static_cast<Exp>(ev(rng));
          f.append_term(r->field().from_int(1 + static_cast<long>(rng() % 100)), ExpSpan(e));
        }
        f.canonicalize();
        if (!f.is_zero()) g.push_back(f);
      }
      if (g.empty()) continue;
      GroebnerBasis gb = buchberger(g);
      const Field& F = r->field();
      for (std::size_t i = 0; i < gb.gens.size(); ++i)
        for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
          ExpVec l = mono_lcm(gb.gens[i].lead_exp(), gb.gens[j].lead_exp());
          Poly s = sub(term_mul(F.inv(gb.gens[i].lead_coef()),
                                mono_div(l, gb.gens[i].lead_exp()), gb.gens[i]),
                       term_mul(F.inv(gb.gens[j].lead_coef()),
                                mono_div(l, gb.gens[j].lead_exp()), gb.gens[j]));
          if (!normal_form(s, gb).is_zero()) return Outcome{false, "an S-pair survives"};
        }
    }

    // saturation idempotence
    RingPtr q = qq({"x", "y", "z"});
    std::vector<std::vector<Poly>> ideals = {
        gens(q, {"x^2*y", "x^2*z", "x*y*z"}),
        gens(q, {"x^2", "x*y"}),
        gens(q, {"x*y - z^2", "x^3"}),
    };
    std::vector<Poly> irr = irrelevant_ideal(q);
    for (const auto& I : ideals) {
      std::vector<Poly> s1 = saturate(I, irr);
      if (!same_ideal(s1, saturate(s1, irr))) return Outcome{false, "saturation not idempotent"};
      std::vector<Poly> sx = saturate(I, parse_poly(q, "x"));
      if (!same_ideal(sx, saturate(sx, parse_poly(q, "x"))))
        return Outcome{false, "single-element saturation not idempotent"};
    }

    // equivalence laws for map identity
    RationalMap A = self_map(q, {"y*z", "x*z", "x*y"});
    RationalMap B = self_map(q, {"5*y*z", "5*x*z", "5*x*y"});
    RationalMap C = self_map(q, {"x*y*z", "x^2*z", "x^2*y"});
    RationalMap D = self_map(q, {"x^2", "y^2", "z^2"});
    bool laws = A.same_map(A) && A.same_map(B) && B.same_map(A) &&
                (!A.same_map(B) || !B.same_map(C) || A.same_map(C)) && A.same_map(C) &&
                !A.same_map(D) && !D.same_map(A);
    if (!laws) return Outcome{false, "map identity laws broken"};

    // randomized rank never exceeds (and here equals) the deterministic rank
    RationalMap gb32 = gabber_map(3, 2, 101);
    DualResult drg = jacobian_dual(gb32);
    DualResult drc = jacobian_dual(A);
    int exact_g = rank_over_target(drg.psi, false);
    int exact_c = rank_over_target(drc.psi, false);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      int qg = rank_over_target(drg.psi, true, seed);
      int qc = rank_over_target(drc.psi, true, seed);
      if (qg > exact_g || qc > exact_c) return Outcome{false, "randomized rank overshoots"};
      if (qg != exact_g || qc != exact_c) return Outcome{false, "randomized rank disagrees"};
    }
    return Outcome{true, ""};
  });

  std::printf("ACCEPTANCE: %d/9 passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
