#pragma once

#include <memory>
#include <string>
#include <vector>

#include "birat/rational_map.hpp"

namespace birat {

// Bihomogeneous relations among the defining forms of a map, presented in the
// bigraded ring k[X, Y] with the source block first. Either a complete
// reduced basis of the relation ideal, or a truncation guaranteed to contain
// every relation of x-degree at most 1 and y-degree at most truncated_to.
struct ReesChunk {
  RingPtr xy_ring;
  std::uint32_t nx = 0;  // source variable count, the first block of xy_ring
  std::vector<Poly> gens;
  std::vector<Bideg> bidegs;
  // every x-degree-1 element seen across the staged runs, kept even after
  // interreduction discards it from gens; low-degree redundant relations make
  // cheap dual-matrix rows
  std::vector<Poly> xlinear;
  bool full = false;
  int truncated_to = 0;
  std::string strategy;
};

// Elimination of the tag variable from the graph ideal of the forms,
// resumable across truncation levels: deferred S-pairs survive between runs,
// so escalating the cap or completing the basis reuses all earlier work.
//
// The cap is expressed through weights under which x-degree-1 relations of
// y-degree at most N stay inside a downward-closed region, which makes the
// truncated basis provably complete in that range.
class ReesSystem {
public:
  explicit ReesSystem(const RationalMap& F);

  void run_to(int N);  // ensure the (1, N) part is complete
  void run_full();     // finish the whole basis
  bool exhausted() const { return state_.exhausted(); }
  int reached() const { return reached_; }

  ReesChunk chunk(std::string strategy) const;

  const RingPtr& xy_ring() const { return xy_; }
  std::uint32_t nx() const { return nx_; }

private:
  void harvest();

  RingPtr xy_;
  RingPtr wxy_;  // k[@w, X, Y], tag block first
  std::uint32_t nx_ = 0, ny_ = 0;
  std::uint32_t degree_ = 0;
  BuchbergerState state_;
  int reached_ = 0;
  std::size_t harvested_ = 0;      // watermark into the raw basis
  std::vector<Poly> pool_;  // accumulated x-degree-1 relations, canonicalized
};

// Full relation ideal via tag elimination; reduced basis, tagged "rees".
ReesChunk rees_full(const RationalMap& F);

// Full relation ideal via the symmetric-algebra presentation saturated by a
// nonzero form; generates the same ideal as rees_full.
ReesChunk rees_saturation(const RationalMap& F);

// Truncated basis, complete for x-degree 1 up to y-degree N. Repeated calls
// on the same map resume the shared computation state.
ReesChunk rees_truncated(const RationalMap& F, int N);

// The x-degree-1 relations of the chunk, cheapest y-degrees first.
std::vector<Poly> linear_part(const ReesChunk& chunk);

// Per-map slot holding the resumable elimination state plus whatever the
// birationality layers park alongside it.
struct StageSlot {
  std::shared_ptr<ReesSystem> system;
  std::shared_ptr<void> dual;
  std::shared_ptr<void> pipeline;
};

StageSlot& stage_slot(const RationalMap& F);

}  // namespace birat
