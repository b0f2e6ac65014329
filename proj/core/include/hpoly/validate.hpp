#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpoly/face_poset.hpp"

namespace hpoly {

enum class Axiom { graded, diamond, strong_flag_connectivity, covers_two };

const char* axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  /// Witness bounds: the offending pair of faces or the disconnected section.
  FaceRef lower;
  FaceRef upper;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;  // at most one per axiom
  /// Axioms that could not be checked because an earlier one failed.
  std::vector<Axiom> skipped;
  std::size_t flag_count = 0;

  bool ok() const { return violations.empty() && skipped.empty(); }
  const Violation* find(Axiom a) const;
};

/// Checks the polytope axioms; failures are report content, never thrown
/// (except LimitError when the flag count exceeds the configured bound).
ValidationReport validate(const FacePoset& p, const Limits& limits = {});

/// Throws NotPolytopalError carrying the first violation unless `p` is valid.
void require_valid(const FacePoset& p, const char* context, const Limits& limits = {});

std::string describe(const ValidationReport& r);

}  // namespace hpoly
