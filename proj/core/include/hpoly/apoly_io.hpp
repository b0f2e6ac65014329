#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hpoly/face_poset.hpp"

namespace hpoly {

/// Reads the line-oriented ".apoly" format. Face lines may come in any order.
/// Throws ParseError with the offending line number.
FacePoset read_poset(std::istream& in);
FacePoset read_poset(const std::filesystem::path& path);
FacePoset parse_poset(const std::string& text);

/// Writes canonical order (see canonicalize); output is byte-stable.
void write_poset(const FacePoset& p, std::ostream& out);
void write_poset(const FacePoset& p, const std::filesystem::path& path);
std::string format_poset(const FacePoset& p);

}  // namespace hpoly
