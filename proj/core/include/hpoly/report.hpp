#pragma once

#include <string>

#include "hpoly/hereditary.hpp"

namespace hpoly {

enum class ReportFormat { text, machine };

/// Symmetry report: face counts, type, group order, orbit classification,
/// hereditary verdicts and the per-facet extension counts. Machine format
/// is one `key value` pair per line and stable across runs.
std::string format_report(const SymmetryAnalysis& analysis, ReportFormat format);

std::string join_ints(const std::vector<int>& values, const char* sep);

}  // namespace hpoly
