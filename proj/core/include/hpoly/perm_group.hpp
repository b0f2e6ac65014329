#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hpoly/coset.hpp"
#include "hpoly/flag_graph.hpp"
#include "hpoly/presentation.hpp"

namespace hpoly {

using Perm = std::vector<std::uint32_t>;

/// Permutations act on the right: (x)(ab) = ((x)a)b.
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& a);
Perm identity_perm(std::size_t degree);
bool is_identity(const Perm& a);
std::size_t perm_order(const Perm& a);

class PermutationGroup {
 public:
  PermutationGroup() = default;
  /// `semiregular` promises that only the identity fixes a point, which lets
  /// order() use an orbit count instead of Schreier-Sims.
  PermutationGroup(std::size_t degree, std::vector<Perm> generators, bool semiregular = false);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool semiregular() const { return semiregular_; }

  /// Orbit of `point`, in breadth-first order over the generators.
  std::vector<std::uint32_t> orbit(std::uint32_t point) const;
  std::size_t order() const;

  /// The element given by a word in the generators.
  Perm evaluate(const Word& w) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  bool semiregular_ = false;
};

/// Right-multiplication action of the generators on the cosets. Over the
/// trivial subgroup the action is regular.
PermutationGroup permutation_group(const CosetTable& table, bool trivial_subgroup = true);

/// Flags are the points of the orbit of point 0 (the group must act freely
/// there); adj[i] is generator i. Throws PreconditionError unless the
/// generators are involutions.
FlagGraph flag_graph_from_reflection_group(const PermutationGroup& g);

/// Flags are pairs (element, colour): adj[i](x, white) = (x k_i, black),
/// adj[i](x, black) = (x k'_i, white) with k_0 = k'_0 = 1, k_1 = s1', k'_1 =
/// s1 and k_i = k'_i = s1 s2 .. s_i. Throws PreconditionError when
/// k_i k'_i is not the identity.
FlagGraph flag_graph_from_rotation_group(const PermutationGroup& g);

enum class HalvingVariant { eta, eta0 };

/// New distinguished generators for the index-2 subgroup of a rank-3 group
/// of type {4,q}: reflections (a0 a1 a0, a2, a1) for eta and (a1, a2, a0 a1
/// a0) for eta0; rotations (s1 s1 s2, s2') and (s2, s2' s1 s1). Throws
/// PreconditionError unless the first period is 4 and the new generators
/// have index 2 (the edge graph is bipartite).
PermutationGroup halving(const PermutationGroup& g, HalvingVariant variant, GroupKind kind);

/// Enumerates the presentation over the trivial subgroup, checks the
/// declared order, and builds the polytope's flag graph.
FlagGraph flag_graph_from_presentation(const GroupPresentation& pres, std::size_t limit = 2'000'000);
FacePoset poset_from_presentation(const GroupPresentation& pres, std::size_t limit = 2'000'000);

}  // namespace hpoly
