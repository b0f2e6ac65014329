#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hpoly {

enum class GroupKind { reflection, rotation };

/// A word over generators g0..g(m-1). Letter k+1 is g_k, -(k+1) its inverse.
using Word = std::vector<int>;

/// String C-group (reflection kind, generators rho_0..rho_(n-1)) or rotation
/// group (generators sigma_1..sigma_(n-1), written g0..g(n-2)) presentation.
struct GroupPresentation {
  GroupKind kind = GroupKind::reflection;
  int rank = 0;
  std::vector<Word> relators;
  std::vector<Word> subgroup;
  /// Expected group order, checked after enumeration when present.
  std::optional<std::size_t> order;

  int generator_count() const { return kind == GroupKind::reflection ? rank : rank - 1; }
};

/// Parses one word such as "g0 g1' (g0 g2)^2 g1^-3".
Word parse_word(const std::string& text, int generator_count);
std::string format_word(const Word& w);

/// Free reduction; for reflection kind also cancels g g (generators are
/// involutions) and treats g' as g.
Word reduce_word(Word w, GroupKind kind);
Word inverse_word(const Word& w);

/// Parses the ".grp" format. Mandatory relators of the kind (involutions and
/// commuting pairs for reflections, (s_i..s_j)^2 for rotations) are added when
/// the header says `auto-relators on`, otherwise their absence is an error; a
/// power relator for every consecutive pair (reflection) or generator
/// (rotation) must always be present. Throws ParseError with line numbers.
GroupPresentation parse_presentation(const std::string& text);
GroupPresentation read_presentation(const std::filesystem::path& path);
std::string format_presentation(const GroupPresentation& pres);

/// Mirror-image rotation presentation: s1 -> s1', s2 -> s1 s1 s2, others
/// fixed. Throws PreconditionError for reflection kind.
GroupPresentation enantiomorph(const GroupPresentation& pres);

}  // namespace hpoly
