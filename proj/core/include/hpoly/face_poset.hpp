#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hpoly {

using FaceIndex = std::uint32_t;
using FlagIndex = std::uint32_t;

/// Practical size bounds. Not part of the theory; callers may raise them.
struct Limits {
  int max_rank = 6;
  std::size_t max_flags = std::size_t{1} << 20;
};

/// Compressed adjacency: row r spans targets[offsets[r] .. offsets[r+1]).
struct Incidence {
  std::vector<std::uint32_t> offsets{0};
  std::vector<FaceIndex> targets;

  std::size_t rows() const { return offsets.size() - 1; }
  std::span<const FaceIndex> row(std::size_t r) const {
    return {targets.data() + offsets[r], offsets[r + 1] - offsets[r]};
  }
  void push_row(std::span<const FaceIndex> values);
};

/// Ranked face poset of a finite abstract n-polytope.
///
/// Faces are identified by (rank, index). The least face F(-1) and the
/// greatest face F(n) are implicit: every vertex covers F(-1) and F(n) covers
/// every facet. A FacePoset is only guaranteed to be well formed (indices in
/// range, every face of rank >= 1 covering at least two faces); use validate()
/// for the polytope axioms.
class FacePoset {
 public:
  FacePoset() = default;

  int rank() const { return rank_; }
  std::size_t face_count(int r) const { return counts_.at(static_cast<std::size_t>(r)); }
  std::size_t vertex_count() const { return face_count(0); }
  std::size_t facet_count() const { return face_count(rank_ - 1); }

  /// Rank r-1 faces covered by face (r, f); r >= 1. Sorted ascending.
  std::span<const FaceIndex> covers(int r, FaceIndex f) const { return down_[r].row(f); }
  /// Rank r+1 faces covering face (r, f); r <= n-2. Sorted ascending.
  std::span<const FaceIndex> covered_by(int r, FaceIndex f) const { return up_[r].row(f); }

  /// Sorted vertex set of face (r, f).
  std::vector<FaceIndex> vertex_set(int r, FaceIndex f) const;
  /// Sorted facet set of face (r, f).
  std::vector<FaceIndex> facet_set(int r, FaceIndex f) const;

  /// Number of maximal chains; stops counting once `cap` is exceeded.
  std::size_t count_flags(std::size_t cap = SIZE_MAX) const;

  friend bool operator==(const FacePoset& a, const FacePoset& b);

 private:
  friend FacePoset build_poset(std::size_t, std::vector<std::vector<std::vector<FaceIndex>>>);

  int rank_ = 0;
  std::vector<std::size_t> counts_;
  std::vector<Incidence> down_;  // down_[r] for r >= 1; down_[0] empty
  std::vector<Incidence> up_;    // up_[r] for r <= n-2
};

/// Builds a poset from per-rank cover lists.
///
/// `covers[r-1][f]` lists the rank r-1 faces covered by face f of rank r, for
/// r = 1..n-1; the rank is covers.size()+1. Lists may be unsorted and are
/// stored sorted; duplicate entries are rejected.
/// Throws PreconditionError on out-of-range indices, empty ranks or a face
/// covering fewer than two faces.
FacePoset build_poset(std::size_t vertex_count,
                      std::vector<std::vector<std::vector<FaceIndex>>> covers);

/// Cover lists in the shape accepted by build_poset.
std::vector<std::vector<std::vector<FaceIndex>>> cover_lists(const FacePoset& p);

/// A face reference inside a section bound; rank -1 / n denote F(-1) / F(n).
struct FaceRef {
  int rank = -1;
  FaceIndex index = 0;
};

struct SectionSpec {
  FaceRef lower;
  FaceRef upper;
};

/// True iff face a <= face b (implicit least/greatest faces allowed).
bool is_incident(const FacePoset& p, FaceRef a, FaceRef b);

/// The section upper/lower as a poset of rank upper.rank - lower.rank - 1.
/// Throws PreconditionError when the bounds are not comparable or the
/// resulting rank is below 1.
FacePoset section(const FacePoset& p, const SectionSpec& s);

/// Facet section F/F(-1) and vertex-figure F(n)/v.
FacePoset face_section(const FacePoset& p, int rank, FaceIndex f);
FacePoset co_face(const FacePoset& p, int rank, FaceIndex f);

/// Rank-reversed poset.
FacePoset dual(const FacePoset& p);

/// Reorders each rank stably by sorted cover lists (bottom-up). When
/// facet_perm is given it receives the new index of each old facet.
FacePoset canonicalize(const FacePoset& p, std::vector<FaceIndex>* facet_perm = nullptr);

/// Schläfli symbol {p1..p(n-1)} if the poset is equivelar.
std::optional<std::vector<int>> schlafli_type(const FacePoset& p);

enum class Describability { vertex, facet };

/// Vertex mode: face -> vertex set is injective. Facet mode: face -> facet set.
bool is_describable(const FacePoset& p, Describability mode);

enum class VertexColor : std::uint8_t { yellow = 0, red = 1 };

/// Proper two-colouring of the edge graph, vertex 0 yellow; absent on an odd
/// cycle or when the edge graph is disconnected from vertex 0's component.
std::optional<std::vector<VertexColor>> edge_bipartition(const FacePoset& p);

/// Convenience for catalog code: rank-2 polygon with m vertices.
FacePoset polygon(std::size_t m);
/// n-simplex (rank n), faces are the nonempty proper subsets of n+1 points.
FacePoset simplex(int n);

}  // namespace hpoly
