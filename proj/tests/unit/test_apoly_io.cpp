#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hpoly/apoly_io.hpp"
#include "hpoly/catalog.hpp"
#include "hpoly/error.hpp"

using namespace hpoly;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(ApolyIo, RoundTripCanonical) {
  for (const char* name : {"cube", "t44-1-2", "t434-4", "polygon-5"}) {
    const FacePoset p = canonicalize(catalog_get(name));
    EXPECT_EQ(parse_poset(format_poset(p)), p) << name;
    EXPECT_EQ(format_poset(parse_poset(format_poset(p))), format_poset(p)) << name;
  }
}

TEST(ApolyIo, CubeGolden) {
  EXPECT_EQ(format_poset(catalog_get("cube")), slurp(HPOLY_TEST_DATA_DIR "/cube.apoly"));
}

TEST(ApolyIo, DanglingIndexReportsLine) {
  const std::string text =
      "apoly 1\n"
      "rank 2\n"
      "count 0 3\n"
      "count 1 3\n"
      "f 1 0: 0 1\n"
      "f 1 1: 1 7\n"
      "f 1 2: 0 2\n";
  try {
    parse_poset(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 6u);
  }
}

TEST(ApolyIo, MissingHeader) { EXPECT_THROW(parse_poset("rank 2\n"), ParseError); }

TEST(ApolyIo, CommentsIgnored) {
  const std::string text = format_poset(polygon(3));
  EXPECT_EQ(parse_poset("# a triangle\n" + text), canonicalize(polygon(3)));
}
