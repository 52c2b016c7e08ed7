#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "birat/field.hpp"

namespace birat {

using Exp = std::uint16_t;
using ExpVec = std::vector<Exp>;
using ExpSpan = std::span<const Exp>;

struct Bideg {
  long x = 0;
  long y = 0;
  bool operator==(const Bideg&) const = default;
};

enum class BlockKind { grevlex, lex, bigrevlex };

// Half-open variable range compared as one unit. bigrevlex compares the
// (x-degree, y-degree) pair first and breaks ties grevlex over the block.
struct OrderBlock {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  BlockKind kind = BlockKind::grevlex;
  bool operator==(const OrderBlock&) const = default;
};

// A polynomial ring over an exact field with a fixed monomial order.
// Bigraded rings tag each variable with bidegree (1,0) or (0,1); ordinary
// rings are graded by total degree.
class Ring {
public:
  Ring(Field field, std::vector<std::string> names, std::vector<OrderBlock> blocks,
       std::vector<std::uint8_t> second_block_flags, bool bigraded);

  // k[names] with grevlex, standard grading
  static std::shared_ptr<const Ring> standard(Field f, std::vector<std::string> names);
  // k[names] with lex
  static std::shared_ptr<const Ring> standard_lex(Field f, std::vector<std::string> names);
  // k[x_names, y_names], bidegree-refined order
  static std::shared_ptr<const Ring> bigraded(Field f, std::vector<std::string> x_names,
                                              std::vector<std::string> y_names);
  // new ring with fresh variables prepended as their own leading grevlex block
  std::shared_ptr<const Ring> with_prefix_block(std::vector<std::string> fresh) const;
  // grevlex ring on this ring's variables listed in the given order
  std::shared_ptr<const Ring> permuted_grevlex(const std::vector<std::uint32_t>& order) const;
  // grevlex ring on a subset of the variables (indices ascending)
  std::shared_ptr<const Ring> subring(const std::vector<std::uint32_t>& keep) const;

  std::size_t nvars() const { return names_.size(); }
  const Field& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  bool is_bigraded() const { return bigraded_; }
  bool is_second_block(std::size_t v) const { return second_[v] != 0; }

  long var_index(const std::string& n) const;  // -1 when absent

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

  // total order on monomials: -1, 0, +1 as a <, =, > b
  int cmp(ExpSpan a, ExpSpan b) const;

  std::uint32_t total_degree(ExpSpan m) const;
  Bideg bidegree(ExpSpan m) const;  // valid only on bigraded rings

private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<OrderBlock> blocks_;
  std::vector<std::uint8_t> second_;  // 1 where bidegree is (0,1)
  bool bigraded_;
};

using RingPtr = std::shared_ptr<const Ring>;

// -- raw monomial helpers on exponent spans --

bool mono_is_one(ExpSpan m);
bool mono_divides(ExpSpan a, ExpSpan b);           // a | b
ExpVec mono_mul(ExpSpan a, ExpSpan b);
ExpVec mono_div(ExpSpan a, ExpSpan b);             // a / b, requires b | a
ExpVec mono_lcm(ExpSpan a, ExpSpan b);
bool mono_coprime(ExpSpan a, ExpSpan b);
std::uint64_t support_mask(ExpSpan m);             // bit i set when var i occurs (i < 64)

}  // namespace birat
