#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with it beyond the FacePoset accessors.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hpoly/face_poset.hpp"

namespace oracle {

using Chain = std::vector<hpoly::FaceIndex>;  // faces of ranks 0..n-1

struct Flags {
  int rank = 0;
  std::vector<Chain> chains;  // sorted
  std::map<Chain, std::size_t> index;
  // adj[i][f] = the i-adjacent flag, or SIZE_MAX if the diamond fails.
  std::vector<std::vector<std::size_t>> adj;
};

/// Chains by depth-first search upward from each vertex.
Flags enumerate_flags(const hpoly::FacePoset& p);

/// Automorphisms as flag permutations, found by trying every image of
/// flag 0 and keeping the maps that respect every adjacency and are
/// well defined on faces.
std::vector<std::vector<std::size_t>> automorphisms(const Flags& f);

struct Summary {
  std::size_t flags = 0;
  std::size_t group_order = 0;
  std::size_t k = 0;
  std::optional<std::vector<int>> class_I;  // k == 2 only
};
Summary summarize(const hpoly::FacePoset& p);

/// Every automorphism of every facet extends to the polytope.
bool facet_hereditary(const hpoly::FacePoset& p);

/// Number of orbits of the automorphism group on faces of rank r.
std::size_t face_orbits(const hpoly::FacePoset& p, int r);

}  // namespace oracle
