#include "hpoly/apoly_io.hpp"

#include <fstream>
#include <sstream>

#include "hpoly/error.hpp"

namespace hpoly {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_number(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size() || v < 0) throw ParseError("bad number '" + tok + "'", line);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad number '" + tok + "'", line);
  }
}

}  // namespace

FacePoset read_poset(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  int stage = 0;  // 0 header, 1 rank, 2 body
  int rank = 0;
  std::vector<long> counts;
  std::vector<std::vector<std::vector<FaceIndex>>> covers;
  std::vector<std::vector<bool>> seen;
  std::vector<std::vector<std::size_t>> face_line;

  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip_comment(raw);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string word;
    ls >> word;
    if (stage == 0) {
      std::string version;
      ls >> version;
      if (word != "apoly" || version != "1") throw ParseError("expected 'apoly 1'", line);
      stage = 1;
    } else if (stage == 1) {
      std::string value;
      ls >> value;
      if (word != "rank") throw ParseError("expected 'rank <n>'", line);
      rank = static_cast<int>(parse_number(value, line));
      if (rank < 1) throw ParseError("rank must be >= 1", line);
      counts.assign(static_cast<std::size_t>(rank), -1);
      covers.resize(static_cast<std::size_t>(rank - 1));
      seen.resize(static_cast<std::size_t>(rank));
      face_line.resize(static_cast<std::size_t>(rank));
      stage = 2;
    } else if (word == "count") {
      std::string r, m;
      ls >> r >> m;
      long rr = parse_number(r, line);
      if (rr >= rank) throw ParseError("count for rank out of range", line);
      auto ri = static_cast<std::size_t>(rr);
      if (counts[ri] != -1) throw ParseError("duplicate count for rank " + r, line);
      counts[ri] = parse_number(m, line);
      if (counts[ri] == 0) throw ParseError("rank " + r + " has no faces", line);
      seen[ri].assign(static_cast<std::size_t>(counts[ri]), false);
      face_line[ri].assign(static_cast<std::size_t>(counts[ri]), 0);
      if (ri >= 1) covers[ri - 1].resize(static_cast<std::size_t>(counts[ri]));
    } else if (word == "f") {
      std::string r, f;
      ls >> r >> f;
      if (f.empty() || f.back() != ':') throw ParseError("expected 'f <rank> <index>:'", line);
      f.pop_back();
      long rr = parse_number(r, line);
      if (rr < 1 || rr >= rank) throw ParseError("face rank out of range", line);
      auto ri = static_cast<std::size_t>(rr);
      if (counts[ri] == -1) throw ParseError("face before its rank count", line);
      long fi = parse_number(f, line);
      if (fi >= counts[ri]) throw ParseError("face index out of range", line);
      if (seen[ri][static_cast<std::size_t>(fi)]) throw ParseError("duplicate face line", line);
      seen[ri][static_cast<std::size_t>(fi)] = true;
      face_line[ri][static_cast<std::size_t>(fi)] = line;
      auto& list = covers[ri - 1][static_cast<std::size_t>(fi)];
      std::string tok;
      while (ls >> tok) list.push_back(static_cast<FaceIndex>(parse_number(tok, line)));
    } else {
      throw ParseError("unknown directive '" + word + "'", line);
    }
  }
  if (stage < 2) throw ParseError("missing header", line);
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] == -1) throw ParseError("missing count for rank " + std::to_string(r), line);
  }
  // Dangling indices are reported against the face's own line.
  for (std::size_t r = 1; r < counts.size(); ++r) {
    for (std::size_t f = 0; f < covers[r - 1].size(); ++f) {
      if (!seen[r][f]) {
        throw ParseError("face " + std::to_string(r) + " " + std::to_string(f) + " has no line", line);
      }
      for (FaceIndex g : covers[r - 1][f]) {
        if (static_cast<long>(g) >= counts[r - 1]) {
          throw ParseError("dangling index " + std::to_string(g), face_line[r][f]);
        }
      }
    }
  }
  try {
    return build_poset(static_cast<std::size_t>(counts[0]), std::move(covers));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0);
  }
}

FacePoset read_poset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_poset(in);
}

FacePoset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return read_poset(in);
}

void write_poset(const FacePoset& p, std::ostream& out) {
  FacePoset c = canonicalize(p);
  out << "apoly 1\n";
  out << "rank " << c.rank() << "\n";
  for (int r = 0; r < c.rank(); ++r) out << "count " << r << " " << c.face_count(r) << "\n";
  for (int r = 1; r < c.rank(); ++r) {
    for (FaceIndex f = 0; f < c.face_count(r); ++f) {
      out << "f " << r << " " << f << ":";
      for (FaceIndex g : c.covers(r, f)) out << " " << g;
      out << "\n";
    }
  }
}

void write_poset(const FacePoset& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_poset(p, out);
}

std::string format_poset(const FacePoset& p) {
  std::ostringstream out;
  write_poset(p, out);
  return out.str();
}

}  // namespace hpoly
