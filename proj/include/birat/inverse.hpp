#pragma once

#include <functional>
#include <optional>
#include <string>

#include "birat/jacobian_dual.hpp"

namespace birat {

struct InverseOptions {
  Strategy strategy = Strategy::hybrid;
  int hybrid_limit = 15;
  int step_limit = 30;
  std::optional<int> minors_count;  // absent: auto heuristic; 0: skip the minors method
  bool assume_dominant = false;     // trust the declared target, skip the image
  bool check_birational = true;
  bool quick_rank = true;
  std::uint64_t seed = 0;
  std::function<void(const std::string&)> trace;
};

// True when F maps birationally onto its target (onto its image unless
// assume_dominant): the dual matrix attains rank (source embedding
// dimension) - 1.
bool is_birational(const RationalMap& F, const InverseOptions& opts = {});

// A representative of the inverse map, from the image variety (or the
// declared target under assume_dominant) back to the source. Tries signed
// maximal minors of degree-greedy row choices first, then the null space of
// the dual matrix. Throws NotBirationalError when check_birational is on and
// the rank falls short.
RationalMap inverse_of_map(const RationalMap& F, const InverseOptions& opts = {});

// Regular, birational onto the image, and with a regular inverse. The minors
// method is skipped by default here: the null-space inverse has the smallest
// degree, which keeps the regularity check affordable.
bool is_embedding(const RationalMap& F, const InverseOptions& opts = {});

}  // namespace birat
