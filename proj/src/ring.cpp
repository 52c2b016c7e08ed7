#include "birat/ring.hpp"

#include <algorithm>

namespace birat {

Ring::Ring(Field field, std::vector<std::string> names, std::vector<OrderBlock> blocks,
           std::vector<std::uint8_t> second_block_flags, bool bigraded)
    : field_(field),
      names_(std::move(names)),
      blocks_(std::move(blocks)),
      second_(std::move(second_block_flags)),
      bigraded_(bigraded) {
  if (names_.empty()) throw ValidationError("ring needs at least one variable");
  if (names_.size() > 64) throw ValidationError("at most 64 variables supported");
  if (second_.size() != names_.size()) throw ValidationError("bad grading table size");
  std::uint32_t at = 0;
  for (const auto& b : blocks_) {
    if (b.begin != at || b.end <= b.begin) throw ValidationError("order blocks must tile the variables");
    at = b.end;
  }
  if (at != names_.size()) throw ValidationError("order blocks must cover all variables");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw ValidationError("duplicate variable name " + names_[i]);
}

std::shared_ptr<const Ring> Ring::standard(Field f, std::vector<std::string> names) {
  std::uint32_t n = static_cast<std::uint32_t>(names.size());
  return std::make_shared<Ring>(f, std::move(names),
                                std::vector<OrderBlock>{{0, n, BlockKind::grevlex}},
                                std::vector<std::uint8_t>(n, 0), false);
}

std::shared_ptr<const Ring> Ring::standard_lex(Field f, std::vector<std::string> names) {
  std::uint32_t n = static_cast<std::uint32_t>(names.size());
  return std::make_shared<Ring>(f, std::move(names),
                                std::vector<OrderBlock>{{0, n, BlockKind::lex}},
                                std::vector<std::uint8_t>(n, 0), false);
}

std::shared_ptr<const Ring> Ring::bigraded(Field f, std::vector<std::string> x_names,
                                           std::vector<std::string> y_names) {
  std::vector<std::string> names = x_names;
  names.insert(names.end(), y_names.begin(), y_names.end());
  std::uint32_t n = static_cast<std::uint32_t>(names.size());
  std::vector<std::uint8_t> second(n, 0);
  for (std::size_t i = x_names.size(); i < n; ++i) second[i] = 1;
  return std::make_shared<Ring>(f, std::move(names),
                                std::vector<OrderBlock>{{0, n, BlockKind::bigrevlex}},
                                std::move(second), true);
}

std::shared_ptr<const Ring> Ring::with_prefix_block(std::vector<std::string> fresh) const {
  std::uint32_t k = static_cast<std::uint32_t>(fresh.size());
  std::vector<std::string> names = std::move(fresh);
  names.insert(names.end(), names_.begin(), names_.end());
  std::vector<OrderBlock> blocks{{0, k, BlockKind::grevlex}};
  for (auto b : blocks_) {
    b.begin += k;
    b.end += k;
    blocks.push_back(b);
  }
  std::vector<std::uint8_t> second(k, 1);  // fresh vars count toward the second grading
  second.insert(second.end(), second_.begin(), second_.end());
  return std::make_shared<Ring>(field_, std::move(names), std::move(blocks), std::move(second),
                                bigraded_);
}

std::shared_ptr<const Ring> Ring::permuted_grevlex(const std::vector<std::uint32_t>& order) const {
  if (order.size() != names_.size()) throw ValidationError("permutation size mismatch");
  std::vector<std::string> names;
  names.reserve(order.size());
  for (auto i : order) names.push_back(names_[i]);
  return standard(field_, std::move(names));
}

std::shared_ptr<const Ring> Ring::subring(const std::vector<std::uint32_t>& keep) const {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (auto i : keep) names.push_back(names_[i]);
  return standard(field_, std::move(names));
}

long Ring::var_index(const std::string& n) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return static_cast<long>(i);
  return -1;
}

bool Ring::operator==(const Ring& o) const {
  return field_ == o.field_ && names_ == o.names_ && blocks_ == o.blocks_ &&
         second_ == o.second_ && bigraded_ == o.bigraded_;
}

namespace {

inline std::uint64_t block_degree(ExpSpan m, std::uint32_t b, std::uint32_t e) {
  std::uint64_t s = 0;
  for (std::uint32_t i = b; i < e; ++i) s += m[i];
  return s;
}

// grevlex within [b, e): higher degree wins, ties go to the monomial whose
// last differing exponent is smaller
inline int cmp_grevlex(ExpSpan a, ExpSpan b_, std::uint32_t b, std::uint32_t e) {
  std::uint64_t da = block_degree(a, b, e), db = block_degree(b_, b, e);
  if (da != db) return da < db ? -1 : 1;
  for (std::uint32_t i = e; i-- > b;) {
    if (a[i] != b_[i]) return a[i] > b_[i] ? -1 : 1;
  }
  return 0;
}

inline int cmp_lex(ExpSpan a, ExpSpan b_, std::uint32_t b, std::uint32_t e) {
  for (std::uint32_t i = b; i < e; ++i) {
    if (a[i] != b_[i]) return a[i] < b_[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int Ring::cmp(ExpSpan a, ExpSpan b) const {
  for (const auto& blk : blocks_) {
    int c = 0;
    switch (blk.kind) {
      case BlockKind::grevlex:
        c = cmp_grevlex(a, b, blk.begin, blk.end);
        break;
      case BlockKind::lex:
        c = cmp_lex(a, b, blk.begin, blk.end);
        break;
      case BlockKind::bigrevlex: {
        std::uint64_t ax = 0, ay = 0, bx = 0, by = 0;
        for (std::uint32_t i = blk.begin; i < blk.end; ++i) {
          if (second_[i]) {
            ay += a[i];
            by += b[i];
          } else {
            ax += a[i];
            bx += b[i];
          }
        }
        if (ax != bx)
          c = ax < bx ? -1 : 1;
        else if (ay != by)
          c = ay < by ? -1 : 1;
        else
          c = cmp_grevlex(a, b, blk.begin, blk.end);
        break;
      }
    }
    if (c != 0) return c;
  }
  return 0;
}

std::uint32_t Ring::total_degree(ExpSpan m) const {
  std::uint32_t s = 0;
  for (auto e : m) s += e;
  return s;
}

Bideg Ring::bidegree(ExpSpan m) const {
  if (!bigraded_) throw ValidationError("bidegree requested in a ring without a bigrading");
  Bideg d;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (second_[i])
      d.y += m[i];
    else
      d.x += m[i];
  }
  return d;
}

bool mono_is_one(ExpSpan m) {
  for (auto e : m)
    if (e) return false;
  return true;
}

bool mono_divides(ExpSpan a, ExpSpan b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExpVec mono_mul(ExpSpan a, ExpSpan b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<Exp>(a[i] + b[i]);
  return r;
}

ExpVec mono_div(ExpSpan a, ExpSpan b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw Error("monomial division underflow");
    r[i] = static_cast<Exp>(a[i] - b[i]);
  }
  return r;
}

ExpVec mono_lcm(ExpSpan a, ExpSpan b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(ExpSpan a, ExpSpan b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

std::uint64_t support_mask(ExpSpan m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size() && i < 64; ++i)
    if (m[i]) mask |= (std::uint64_t{1} << i);
  return mask;
}

}  // namespace birat
