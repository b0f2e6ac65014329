#include "hpoly/report.hpp"

#include <sstream>

namespace hpoly {

std::string join_ints(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_report(const SymmetryAnalysis& a, ReportFormat format) {
  const FacePoset& p = a.poset();
  const OrbitClassification& orb = a.orbits();
  const int n = p.rank();
  std::vector<int> faces;
  for (int r = 0; r < n; ++r) faces.push_back(static_cast<int>(p.face_count(r)));
  const auto type = schlafli_type(p);
  const auto facets = a.section_checks(-1, n - 1, false);
  const bool hereditary = a.facet_hereditary();
  const bool chiral_her = a.chirally_hereditary();

  std::ostringstream out;
  if (format == ReportFormat::machine) {
    out << "rank " << n << '\n';
    out << "faces " << join_ints(faces, " ") << '\n';
    out << "type " << (type ? join_ints(*type, ",") : std::string("none")) << '\n';
    out << "flags " << a.flags().flag_count() << '\n';
    out << "group " << orb.group_order << '\n';
    out << "orbits k=" << orb.k << '\n';
    out << "class I=" << (orb.class_I && !orb.class_I->empty() ? join_ints(*orb.class_I, ",") : "none") << '\n';
    out << "verdict " << orb.verdict_text() << '\n';
    out << "hereditary " << yes_no(hereditary) << '\n';
    out << "chirally-hereditary " << yes_no(chiral_her) << '\n';
    for (int j = 1; j < n; ++j) out << "face-hereditary j=" << j << ' ' << yes_no(a.j_face_hereditary(j, false)) << '\n';
    for (const auto& c : facets) {
      out << "facet " << c.upper.index << " group=" << c.group_order << " extends=" << c.extends << '\n';
    }
    return out.str();
  }

  out << "rank-" << n << " polytope, faces (" << join_ints(faces, ", ") << "), "
      << a.flags().flag_count() << " flags\n";
  if (type) {
    out << "type {" << join_ints(*type, ",") << "}\n";
  } else {
    out << "not equivelar\n";
  }
  out << "automorphism group of order " << orb.group_order << ", " << orb.k << " flag orbit"
      << (orb.k == 1 ? "" : "s") << " (" << orb.verdict_text() << ")\n";
  if (orb.class_I) out << "class 2_{" << join_ints(*orb.class_I, ",") << "}\n";
  out << "hereditary: " << (hereditary ? "yes" : "no") << '\n';
  out << "chirally hereditary: " << (chiral_her ? "yes" : "no") << '\n';
  for (int j = 1; j < n; ++j) {
    out << j << "-face hereditary: " << (a.j_face_hereditary(j, false) ? "yes" : "no") << '\n';
  }
  for (const auto& c : facets) {
    out << "  facet " << c.upper.index << ": " << c.extends << " of " << c.group_order
        << " automorphisms extend";
    if (c.witness) out << " (witness flag " << *c.witness << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace hpoly
