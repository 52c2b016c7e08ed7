#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "birat/groebner.hpp"

namespace birat {

struct SyzygyMatrix {
  RingPtr ring;
  std::vector<std::vector<Poly>> cols;  // each column is one syzygy vector

  std::size_t ncols() const { return cols.size(); }
};

// Generators of { tau in P^t : sum_i tau_i * columns_i lies in relations * P^k },
// the kernel of the map P^t -> (P / relations)^k given by the columns.
// Computed with a module Groebner basis over the ambient ring, tag components
// eliminated last. Coordinates are returned unreduced.
std::vector<std::vector<Poly>> module_kernel(const std::vector<std::vector<Poly>>& columns,
                                             const std::vector<Poly>& relations);

// First syzygies of a list of ring elements over P/relations: columns tau with
// sum tau_i f_i = 0 in the quotient. Coordinates come back reduced modulo the
// relations and zero columns are dropped.
SyzygyMatrix syzygies(const std::vector<Poly>& elements, const std::vector<Poly>& relations);

// Repeated exact division by one element of P/relations. divide(num) returns
// q with num = q*f modulo the relations, or nothing when num is not a
// multiple. The witness-tracking module basis is built once.
class QuotientDivider {
public:
  QuotientDivider(const Poly& f, const std::vector<Poly>& relations);
  ~QuotientDivider();
  QuotientDivider(QuotientDivider&&) noexcept;
  QuotientDivider& operator=(QuotientDivider&&) noexcept;

  std::optional<Poly> divide(const Poly& num) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace birat
