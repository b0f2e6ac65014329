#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "hpoly/face_poset.hpp"
#include "hpoly/flag_graph.hpp"
#include "hpoly/symmetry.hpp"

namespace hpoly {

/// Extension test for one section G/F.
struct SectionCheck {
  FaceRef lower;
  FaceRef upper;
  std::size_t group_order = 1;  // |Γ(G/F)|
  std::size_t extends = 1;      // automorphisms of G/F that extend to the whole polytope
  /// A flag through F and G whose section part is the image of a
  /// non-extendable section automorphism.
  std::optional<FlagIndex> witness;
  /// Same counts restricted to the rotation subgroup of the section.
  std::size_t rotation_order = 1;
  std::size_t rotation_extends = 1;

  bool ok() const { return extends == group_order; }
  bool rotation_ok() const { return rotation_extends == rotation_order; }
};

struct HereditaryReport {
  bool facet_hereditary = false;
  std::vector<SectionCheck> per_facet;
  /// (j, strong) for 1 <= j <= n-1.
  std::map<std::pair<int, bool>, bool> j_face;
  /// (i, j, strong) for 0 <= i < j <= n-1.
  std::map<std::tuple<int, int, bool>, bool> sections;
  bool chirally_hereditary = false;
};

/// Flag graph, automorphism group and orbits of a polytope, computed once and
/// shared by the hereditary predicates.
class SymmetryAnalysis {
 public:
  explicit SymmetryAnalysis(const FacePoset& p, const Limits& limits = {});

  const FacePoset& poset() const { return poset_; }
  const FlagGraph& flags() const { return flags_; }
  const AutomorphismGroup& group() const { return group_; }
  const OrbitClassification& orbits() const { return orbits_; }

  /// One check per section G/F with rank(F) = lower_rank, rank(G) =
  /// upper_rank (-1 and n denote the least and greatest face). Strong
  /// extensions must also fix every face below F and above G.
  std::vector<SectionCheck> section_checks(int lower_rank, int upper_rank, bool strong) const;

  bool facet_hereditary() const;
  bool j_face_hereditary(int j, bool strong) const;
  bool section_hereditary(int i, int j, bool strong) const;
  bool chirally_hereditary() const;
  bool transitive(int i, TransitivityMode mode) const;

  HereditaryReport report() const;

 private:
  FacePoset poset_;
  FlagGraph flags_;
  AutomorphismGroup group_;
  OrbitClassification orbits_;
};

/// Flag graph of the section through flag `base` between ranks lower_rank and
/// upper_rank; local flag 0 is `base`. `to_global` maps local to global flags.
FlagGraph section_flag_graph(const FlagGraph& fg, FlagIndex base, int lower_rank, int upper_rank,
                             std::vector<FlagIndex>& to_global);

HereditaryReport hereditary_report(const FacePoset& p, const Limits& limits = {});
bool j_face_hereditary(const FacePoset& p, int j, bool strong, const Limits& limits = {});
bool section_hereditary(const FacePoset& p, int i, int j, bool strong, const Limits& limits = {});
bool chirally_hereditary(const FacePoset& p, const Limits& limits = {});

}  // namespace hpoly
