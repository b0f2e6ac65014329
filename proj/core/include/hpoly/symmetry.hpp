#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hpoly/face_poset.hpp"
#include "hpoly/flag_graph.hpp"

namespace hpoly {

/// Automorphism group of a flag graph, stored as generators plus the orbit
/// of the base flag. The action on flags is free, so the orbit size is the
/// group order and each orbit element names exactly one automorphism.
struct AutomorphismGroup {
  FlagIndex base_flag = 0;
  std::vector<std::vector<FlagIndex>> generators;
  /// Images of the base flag, ascending.
  std::vector<FlagIndex> base_orbit;

  std::size_t order() const { return base_orbit.size(); }
};

AutomorphismGroup automorphisms(const FlagGraph& fg);

/// The unique adjacency-preserving map from `from` to `to` sending flag a to
/// flag b, if one exists. Both graphs must be connected.
std::optional<std::vector<FlagIndex>> extend_flag_map(const FlagGraph& from, const FlagGraph& to,
                                                      FlagIndex a, FlagIndex b);

/// Stable colouring of flags by iterated neighbourhood refinement, seeded
/// with the lengths of the (i, i+1) alternating cycles. Equal colours are
/// necessary for two flags to be related by an automorphism.
std::vector<std::uint32_t> refine_colors(const FlagGraph& fg);

enum class Verdict { regular, chiral, two_orbit, multi_orbit };

struct OrbitClassification {
  std::size_t k = 0;
  std::size_t group_order = 0;
  /// Orbit label per flag: the least flag index in its orbit.
  std::vector<FlagIndex> orbit_of;
  /// Ranks i with flags and their i-adjacent flags in one orbit (k == 2 only).
  std::optional<std::vector<int>> class_I;
  Verdict verdict = Verdict::multi_orbit;

  /// "regular", "chiral", "2-orbit" or "<k>-orbit".
  std::string verdict_text() const;
};

OrbitClassification flag_orbits(const FlagGraph& fg);
OrbitClassification flag_orbits(const FlagGraph& fg, const AutomorphismGroup& group);

enum class TransitivityMode { face, chain };

/// Face mode: transitive on rank-i faces. Chain mode: transitive on chains
/// with one face of each rank 0..i. Requires flag chains.
bool transitivity(const FlagGraph& fg, const OrbitClassification& orbits, int i, TransitivityMode mode);
bool transitivity(const FlagGraph& fg, int i, TransitivityMode mode);

bool is_isomorphic(const FlagGraph& a, const FlagGraph& b);
bool is_isomorphic(const FacePoset& a, const FacePoset& b, const Limits& limits = {});

}  // namespace hpoly
