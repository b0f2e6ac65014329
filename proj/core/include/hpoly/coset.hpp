#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hpoly/presentation.hpp"

namespace hpoly {

/// Complete coset table. Columns 0..m-1 are the generators; for rotation
/// kind columns m..2m-1 are their inverses, for reflection kind generators
/// are involutions and have no separate inverse columns. Row 0 is the
/// subgroup itself; rows are numbered in breadth-first standard order.
struct CosetTable {
  int generators = 0;
  int columns = 0;
  std::size_t coset_count = 0;
  std::vector<std::uint32_t> entries;  // row-major, coset_count x columns

  std::uint32_t at(std::size_t coset, int column) const {
    return entries[coset * static_cast<std::size_t>(columns) + static_cast<std::size_t>(column)];
  }
  /// Image of a coset under generator g (k >= 0) or its inverse.
  std::uint32_t act(std::size_t coset, int letter) const;
  std::uint32_t trace(std::size_t coset, const Word& w) const;
};

struct EnumerationStats {
  std::size_t defined = 0;        // cosets ever defined
  std::size_t max_live = 0;       // peak of simultaneously live cosets
  std::size_t coincidences = 0;
};

/// Felsch-style Todd-Coxeter enumeration of the cosets of the subgroup
/// generated by `subgroup` (the presentation's own `sub` words are used when
/// it is empty). Definitions fill the first undefined (coset, column) entry;
/// relators are scanned in input order. Throws LimitError once more than
/// `limit` cosets are live.
CosetTable coset_enumerate(const GroupPresentation& pres, const std::vector<Word>& subgroup,
                           std::size_t limit, EnumerationStats* stats = nullptr);
CosetTable coset_enumerate(const GroupPresentation& pres, std::size_t limit = 2'000'000,
                           EnumerationStats* stats = nullptr);

}  // namespace hpoly
