#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hpoly/face_poset.hpp"

namespace hpoly {

/// Medial of a polyhedron: vertices are the edges of p, edges the incident
/// (vertex, 2-face) pairs, 2-faces the 2-faces and the vertices of p.
FacePoset medial(const FacePoset& p, const Limits& limits = {});

/// Generalized halving of a vertex-transitive polyhedron of type {2m,q} with
/// bipartite edge graph. Vertices are the yellow vertices (vertex 0's class);
/// faces are the red vertex-figures and, for m >= 3, one m-gon per 2-face.
/// For m = 2 the squares contribute their yellow diagonals only.
FacePoset halved(const FacePoset& p, const Limits& limits = {});

struct TwoPowerOptions {
  bool check = true;               // verify |Γ(2^K)| = 2^v |Γ(K)|
  std::size_t max_vertices = 16;   // refuse larger K
};

/// 2^K: vertices are the 0/1 vectors indexed by the vertices of K, and each
/// face F of K (including the empty face) gives the faces F(e) = {x : x_i =
/// e_i off F}. K must be vertex-describable.
FacePoset two_power(const FacePoset& k, const TwoPowerOptions& options = {}, const Limits& limits = {});

/// dual(2^(dual q)) for a chiral, facet-describable q: a two-orbit polytope
/// whose facets are all isomorphic to q.
FacePoset chiral_extension(const FacePoset& q, const TwoPowerOptions& options = {}, const Limits& limits = {});

struct OppositeVertexClash {
  FaceIndex face_a = 0;
  FaceIndex face_b = 0;
  FaceIndex vertex_u = 0;
  FaceIndex vertex_v = 0;
};

struct AlternatingPreconditionReport {
  bool bipartite = false;
  bool vertex_describable_P = false;
  bool vertex_describable_L = false;
  std::optional<OppositeVertexClash> opposite_vertex_clash;
  /// Facets are polyhedra of type {4,q}.
  bool square_facets = false;
  bool vertex_transitive_facets = false;

  bool ok() const {
    return bipartite && vertex_describable_P && vertex_describable_L && !opposite_vertex_clash &&
           square_facets && vertex_transitive_facets;
  }
  std::string describe() const;
};

AlternatingPreconditionReport alternating_preconditions(const FacePoset& p, const Limits& limits = {});

enum class AlternatingFacet { halved_facet, vertex_figure };

struct AlternatingResult {
  FacePoset poset;
  /// Kind of each facet of `poset`, by facet index.
  std::vector<AlternatingFacet> facet_kind;
  /// 2-faces whose yellow vertex set also contains diagonals of squares
  /// that do not meet their red vertex. Zero when vertex-set inclusion alone
  /// determines the incidences.
  std::size_t ambiguous_ridges = 0;
};

/// The alternating polytope of a rank-4 polytope with {4,q} facets. Throws
/// PreconditionError carrying the report when a precondition fails.
AlternatingResult alternating(const FacePoset& p, const Limits& limits = {});

}  // namespace hpoly
