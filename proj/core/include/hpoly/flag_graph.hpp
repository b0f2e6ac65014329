#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hpoly/face_poset.hpp"

namespace hpoly {

/// Flags of a polytope plus one adjacency involution per rank.
///
/// adjacent(i, f) is the unique flag that differs from flag f exactly in its
/// rank-i face. When built from a poset, flag chains are kept and flags are
/// numbered in lexicographic chain order.
class FlagGraph {
 public:
  FlagGraph() = default;
  FlagGraph(int rank, std::vector<std::vector<FlagIndex>> adjacency,
            std::vector<FaceIndex> chains = {});

  int rank() const { return rank_; }
  std::size_t flag_count() const { return count_; }
  FlagIndex adjacent(int i, FlagIndex f) const { return adj_[static_cast<std::size_t>(i)][f]; }
  std::span<const FlagIndex> adjacency(int i) const { return adj_[static_cast<std::size_t>(i)]; }

  bool has_chains() const { return !chains_.empty(); }
  /// Faces of ranks 0..n-1 in flag f.
  std::span<const FaceIndex> chain(FlagIndex f) const {
    return {chains_.data() + static_cast<std::size_t>(f) * static_cast<std::size_t>(rank_),
            static_cast<std::size_t>(rank_)};
  }

 private:
  int rank_ = 0;
  std::size_t count_ = 0;
  std::vector<std::vector<FlagIndex>> adj_;
  std::vector<FaceIndex> chains_;
};

/// Builds the flag graph. The poset must satisfy the diamond condition
/// (checked); throws NotPolytopalError otherwise and LimitError above
/// limits.max_flags.
FlagGraph flag_graph(const FacePoset& p, const Limits& limits = {});

/// First violated flag-graph invariant, or empty when the adjacency system is
/// a connected family of fixed-point-free involutions with adj[i], adj[j]
/// commuting for |i-j| >= 2.
std::string check_flag_graph(const FlagGraph& fg);

/// True iff the flag graph is bipartite; `parity` receives 0/1 per flag.
bool flag_parity(const FlagGraph& fg, std::vector<std::uint8_t>& parity);

/// Inverse of flag_graph: i-faces are the components of the graph without
/// adj[i]. Throws NotPolytopalError when the adjacency system is not the flag
/// graph of a polytope.
FacePoset poset_from_flag_graph(const FlagGraph& fg);

}  // namespace hpoly
