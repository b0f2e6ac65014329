#include "hpoly/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hpoly/error.hpp"

namespace hpoly {

namespace {

class WordParser {
 public:
  WordParser(const std::string& text, int gens) : s_(text), gens_(gens) {}

  Word parse() {
    Word w = sequence();
    skip();
    if (pos_ != s_.size()) {
      if (s_[pos_] == ')') fail("unbalanced ')'");
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) { throw ParseError(why); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  long number() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("missing exponent after '^'");
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  Word power(Word base) {
    if (!peek('^')) return base;
    ++pos_;
    long m = number();
    if (m < 0) {
      base = inverse_word(base);
      m = -m;
    }
    Word out;
    for (long k = 0; k < m; ++k) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  Word sequence() {
    Word w;
    for (;;) {
      skip();
      if (pos_ == s_.size() || s_[pos_] == ')') return w;
      Word atom;
      char c = s_[pos_];
      if (c == '(') {
        ++pos_;
        atom = sequence();
        if (!peek(')')) fail("missing ')'");
        ++pos_;
      } else if (c == 'g') {
        ++pos_;
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("generator index missing after 'g'");
        long k = std::stol(s_.substr(start, pos_ - start));
        if (k >= gens_) fail("unknown generator g" + std::to_string(k));
        int letter = static_cast<int>(k) + 1;
        if (pos_ < s_.size() && s_[pos_] == '\'') {
          letter = -letter;
          ++pos_;
        }
        atom = {letter};
      } else if (c == '^') {
        fail("power without base");
      } else {
        fail("unknown token '" + std::string(1, c) + "'");
      }
      atom = power(std::move(atom));
      w.insert(w.end(), atom.begin(), atom.end());
    }
  }

  const std::string& s_;
  int gens_;
  std::size_t pos_ = 0;
};

// Cyclically reduced form used to compare relators.
Word cyclic_reduce(Word w, GroupKind kind) {
  w = reduce_word(std::move(w), kind);
  auto cancels = [&](int a, int b) { return kind == GroupKind::reflection ? a == b : a == -b; };
  while (w.size() >= 2 && cancels(w.front(), w.back())) {
    w.pop_back();
    w.erase(w.begin());
  }
  return w;
}

// True iff r equals base^m (m >= 1) up to cyclic rotation and inversion.
bool is_power_of(const Word& relator, const Word& base, GroupKind kind) {
  Word r = cyclic_reduce(relator, kind);
  if (r.empty() || base.empty() || r.size() % base.size() != 0) return false;
  for (const Word& candidate : {r, cyclic_reduce(inverse_word(r), kind)}) {
    for (std::size_t shift = 0; shift < candidate.size(); ++shift) {
      bool match = true;
      for (std::size_t k = 0; k < candidate.size() && match; ++k) {
        match = candidate[(k + shift) % candidate.size()] == base[k % base.size()];
      }
      if (match) return true;
    }
  }
  return false;
}

bool has_power(const std::vector<Word>& rels, const Word& base, GroupKind kind) {
  return std::any_of(rels.begin(), rels.end(), [&](const Word& r) { return is_power_of(r, base, kind); });
}

bool has_exact(const std::vector<Word>& rels, const Word& target, GroupKind kind) {
  Word t = cyclic_reduce(target, kind);
  if (t.empty()) return true;
  return std::any_of(rels.begin(), rels.end(), [&](const Word& r) {
    Word c = cyclic_reduce(r, kind);
    return c.size() == t.size() && is_power_of(c, t, kind);
  });
}

Word repeat(const Word& w, int m) {
  Word out;
  for (int k = 0; k < m; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

// Relators every presentation of the kind must contain (involutions are
// implicit for reflections), paired with a display name.
std::vector<std::pair<Word, std::string>> mandatory(GroupKind kind, int rank) {
  std::vector<std::pair<Word, std::string>> out;
  auto add = [&](const Word& base) { out.push_back({repeat(base, 2), "(" + format_word(base) + ")^2"}); };
  if (kind == GroupKind::reflection) {
    for (int i = 0; i < rank; ++i) {
      for (int j = i + 2; j < rank; ++j) add({i + 1, j + 1});
    }
  } else {
    for (int i = 0; i < rank - 1; ++i) {
      for (int j = i + 1; j < rank - 1; ++j) {
        Word base;
        for (int k = i; k <= j; ++k) base.push_back(k + 1);
        add(base);
      }
    }
  }
  return out;
}

}  // namespace

Word parse_word(const std::string& text, int generator_count) {
  return WordParser(text, generator_count).parse();
}

std::string format_word(const Word& w) {
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += ' ';
    out += 'g' + std::to_string(std::abs(letter) - 1);
    if (letter < 0) out += '\'';
  }
  return out;
}

Word reduce_word(Word w, GroupKind kind) {
  Word out;
  for (int letter : w) {
    if (kind == GroupKind::reflection) letter = std::abs(letter);
    const bool cancel = !out.empty() && (kind == GroupKind::reflection ? out.back() == letter : out.back() == -letter);
    if (cancel) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

GroupPresentation parse_presentation(const std::string& text) {
  GroupPresentation pres;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool header = false, have_kind = false, have_rank = false, auto_relators = false;
  std::vector<std::pair<std::string, std::size_t>> rel_text, sub_text;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    rest = trim(rest);
    if (!header) {
      if (key != "cgroup" || rest != "1") throw ParseError("expected 'cgroup 1'", line);
      header = true;
    } else if (key == "kind") {
      if (rest == "reflection") {
        pres.kind = GroupKind::reflection;
      } else if (rest == "rotation") {
        pres.kind = GroupKind::rotation;
      } else {
        throw ParseError("unknown kind '" + rest + "'", line);
      }
      have_kind = true;
    } else if (key == "rank") {
      try {
        pres.rank = std::stoi(rest);
      } catch (const std::logic_error&) {
        throw ParseError("bad rank", line);
      }
      if (pres.rank < 2) throw ParseError("rank must be >= 2", line);
      have_rank = true;
    } else if (key == "order") {
      try {
        pres.order = std::stoull(rest);
      } catch (const std::logic_error&) {
        throw ParseError("bad order", line);
      }
    } else if (key == "auto-relators") {
      if (rest != "on" && rest != "off") throw ParseError("auto-relators expects on|off", line);
      auto_relators = rest == "on";
    } else if (key == "rel") {
      rel_text.emplace_back(rest, line);
    } else if (key == "sub") {
      sub_text.emplace_back(rest, line);
    } else {
      throw ParseError("unknown directive '" + key + "'", line);
    }
  }
  if (!header) throw ParseError("missing 'cgroup 1' header", line);
  if (!have_kind) throw ParseError("missing kind", line);
  if (!have_rank) throw ParseError("missing rank", line);

  const int gens = pres.generator_count();
  auto words = [&](const auto& items, std::vector<Word>& out) {
    for (const auto& [t, l] : items) {
      try {
        out.push_back(reduce_word(parse_word(t, gens), pres.kind));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), l);
      }
    }
  };
  words(rel_text, pres.relators);
  words(sub_text, pres.subgroup);

  for (const auto& [w, name] : mandatory(pres.kind, pres.rank)) {
    if (has_exact(pres.relators, w, pres.kind)) continue;
    if (!auto_relators) throw ParseError("missing mandatory relator " + name, line);
    pres.relators.push_back(w);
  }
  if (pres.kind == GroupKind::reflection) {
    for (int i = 0; i + 1 < pres.rank; ++i) {
      if (!has_power(pres.relators, {i + 1, i + 2}, pres.kind)) {
        throw ParseError("missing relator (g" + std::to_string(i) + " g" + std::to_string(i + 1) + ")^p", line);
      }
    }
  } else {
    for (int i = 0; i < gens; ++i) {
      if (!has_power(pres.relators, {i + 1}, pres.kind)) {
        throw ParseError("missing relator g" + std::to_string(i) + "^p", line);
      }
    }
  }
  return pres;
}

GroupPresentation read_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string format_presentation(const GroupPresentation& pres) {
  std::ostringstream out;
  out << "cgroup 1\n";
  out << "kind " << (pres.kind == GroupKind::reflection ? "reflection" : "rotation") << "\n";
  out << "rank " << pres.rank << "\n";
  if (pres.order) out << "order " << *pres.order << "\n";
  for (const auto& r : pres.relators) out << "rel " << format_word(r) << "\n";
  for (const auto& s : pres.subgroup) out << "sub " << format_word(s) << "\n";
  return out.str();
}

GroupPresentation enantiomorph(const GroupPresentation& pres) {
  if (pres.kind != GroupKind::rotation) throw PreconditionError("enantiomorph needs a rotation presentation");
  auto substitute = [&](const Word& w) {
    Word out;
    for (int letter : w) {
      const int g = std::abs(letter);
      Word image;
      if (g == 1) {
        image = {-1};
      } else if (g == 2) {
        image = {1, 1, 2};
      } else {
        image = {g};
      }
      if (letter < 0) image = inverse_word(image);
      out.insert(out.end(), image.begin(), image.end());
    }
    return reduce_word(std::move(out), pres.kind);
  };
  GroupPresentation out = pres;
  out.relators.clear();
  out.subgroup.clear();
  for (const auto& r : pres.relators) out.relators.push_back(substitute(r));
  for (const auto& s : pres.subgroup) out.subgroup.push_back(substitute(s));
  // The new generators satisfy the standard relators too; keep them explicit
  // so the result re-parses.
  for (int i = 0; i < pres.generator_count(); ++i) {
    for (const auto& r : pres.relators) {
      if (is_power_of(r, {i + 1}, pres.kind)) {
        out.relators.push_back(repeat({i + 1}, static_cast<int>(cyclic_reduce(r, pres.kind).size())));
        break;
      }
    }
  }
  for (const auto& [w, name] : mandatory(pres.kind, pres.rank)) {
    if (!has_exact(out.relators, w, pres.kind)) out.relators.push_back(w);
  }
  return out;
}

}  // namespace hpoly
