#pragma once

#include <optional>
#include <vector>

#include "birat/poly.hpp"

namespace birat {

// Truncation cap expressed through two weight vectors: an S-pair is deferred
// when the weighted degree of its lcm exceeds (max1, max2) componentwise.
struct WeightCap {
  std::vector<std::uint32_t> w1, w2;
  std::uint64_t max1 = 0, max2 = 0;

  bool within(ExpSpan m) const {
    std::uint64_t d1 = 0, d2 = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      d1 += std::uint64_t{m[i]} * w1[i];
      d2 += std::uint64_t{m[i]} * w2[i];
    }
    return d1 <= max1 && d2 <= max2;
  }
};

struct GroebnerBasis {
  RingPtr ring;
  std::vector<Poly> gens;  // reduced, normalized, ascending by leading monomial
  bool complete = true;
  std::optional<std::pair<int, int>> cap;  // the (1, N) record for truncated runs

  bool operator==(const GroebnerBasis& o) const { return gens == o.gens; }
};

// Buchberger with sugar selection and the Gebauer-Moller pair criteria.
// The pair queue survives truncated runs, so a capped computation can be
// resumed with a larger cap without losing generators.
class BuchbergerState {
public:
  BuchbergerState(RingPtr ring, const std::vector<Poly>& gens);

  void set_cap(std::optional<WeightCap> cap) { cap_ = std::move(cap); }
  void run();                    // process every pending pair within the cap
  bool exhausted() const;        // true when no pending pairs remain at all
  GroebnerBasis snapshot() const;
  const std::vector<Poly>& working_basis() const { return basis_; }
  std::size_t pairs_processed() const { return processed_; }

private:
  struct PairRec {
    std::uint32_t i, j;
    ExpVec lcm;
    std::uint64_t sugar;
    std::uint32_t deg;
    bool alive = true;
    bool consumed = false;
  };

  void insert_generator(const Poly& g);
  void add_basis_element(Poly g, std::uint64_t sugar);
  Poly reduce_full(Poly f, std::uint64_t* sugar) const;
  bool pair_in_cap(const PairRec& p) const;

  RingPtr ring_;
  std::vector<Poly> basis_;
  std::vector<std::uint64_t> sugar_;
  std::vector<std::uint64_t> mask_;
  std::vector<PairRec> pool_;
  std::optional<WeightCap> cap_;
  std::size_t processed_ = 0;
};

// Reduced Groebner basis. With a cap the ring must be bigraded, the input
// bihomogeneous, and the result contains every reduced-basis element of
// bidegree at most (cap.first, cap.second); pending work is discarded (use
// BuchbergerState directly to resume).
GroebnerBasis buchberger(const std::vector<Poly>& gens,
                         std::optional<std::pair<int, int>> cap = std::nullopt);

Poly normal_form(const Poly& f, const GroebnerBasis& gb);
Poly normal_form(const Poly& f, const std::vector<Poly>& reducers);

// I cap k[kept vars] for an order that eliminates drop_vars; the dropped set
// must be an initial segment of order blocks, or the x-part of a bigraded
// ring under its bidegree-refined order. Returns polynomials of the ambient
// ring free of the dropped variables.
std::vector<Poly> eliminate(const std::vector<Poly>& gens,
                            const std::vector<std::uint32_t>& drop_vars);

bool is_unit_ideal(const GroebnerBasis& gb);

}  // namespace birat
