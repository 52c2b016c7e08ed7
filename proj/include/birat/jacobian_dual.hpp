#pragma once

#include <functional>
#include <string>
#include <vector>

#include "birat/rees.hpp"

namespace birat {

enum class Strategy { hybrid, rees, simis, saturation };

// Matrix of y-coefficient forms extracted from liftings of the x-linear
// relations of a map: row j holds the x-partials of the lifting P_j, so
// sum_i entry(j, i) * x_i reconstructs P_j. Its rank over the target
// coordinate ring decides birationality: rank (source embedding dimension)-1
// means birational onto the target.
struct JacobianDualMatrix {
  Variety target;                       // presentation the entries are read in
  std::vector<std::vector<Poly>> rows;  // entries in the target ambient ring
  std::vector<Poly> liftings;           // the chosen P_j, in xy_ring
  RingPtr xy_ring;
  std::uint32_t ncols = 0;              // source variables after re-presentation
  Represent rep;                        // how the source was re-presented
  std::vector<Poly> sample_forms;       // re-presented defining forms
  bool can_sample = false;              // source ambient is a whole projective space
  bool from_full_basis = false;

  std::uint32_t nrows() const { return static_cast<std::uint32_t>(rows.size()); }
  std::uint32_t target_rank() const { return ncols == 0 ? 0 : ncols - 1; }
};

struct DualOptions {
  Strategy strategy = Strategy::hybrid;
  int hybrid_limit = 15;
  int step_limit = 30;  // escalation stages before giving up
  bool quick_rank = true;
  std::uint64_t seed = 0;
  int attempts = 10;  // submatrix draws per certification round
  std::function<void(const std::string&)> trace;
};

struct DualResult {
  JacobianDualMatrix psi;
  bool rank_attained = false;  // certified >= target_rank() along the way
  int stages = 0;
};

// Build the dual matrix under the chosen strategy, re-presenting a degenerate
// source first. Escalating strategies test the rank after every stage and
// stop early once it certifies; hybrid completes the whole basis after the
// stage degree reaches hybrid_limit; simis raises StepLimitError after
// step_limit stages without certification.
DualResult jacobian_dual(const RationalMap& F, const DualOptions& opts = {});

// Exact rank over the fraction field of the target coordinate ring,
// fraction-free elimination with normal-form zero tests. The quick path
// evaluates at random source points first and can only confirm the maximal
// possible value early, never report lower.
int rank_over_target(const JacobianDualMatrix& psi, bool quick = true, std::uint64_t seed = 0);

// Certify rank >= r: random-point evaluation when sampling is available,
// then a bounded number of degree-greedy seeded minor draws. False means
// "not certified", never "rank < r".
bool rank_at_least(const JacobianDualMatrix& psi, std::uint32_t r, const DualOptions& opts);

// Exact determinant over the polynomial ring, by fraction-free elimination.
Poly poly_det(std::vector<std::vector<Poly>> m, const RingPtr& ring);

// Pick `want` indices preferring small scores, ties broken by a seeded
// shuffle; result ascending.
std::vector<std::size_t> greedy_pick(const std::vector<std::uint64_t>& scores, std::size_t want,
                                     std::uint64_t jitter_seed);

}  // namespace birat
