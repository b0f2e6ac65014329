#include "hpoly/coset.hpp"

#include <algorithm>
#include <set>

#include "hpoly/error.hpp"

namespace hpoly {

std::uint32_t CosetTable::act(std::size_t coset, int letter) const {
  const int g = std::abs(letter) - 1;
  if (letter > 0 || columns == generators) return at(coset, g);
  return at(coset, generators + g);
}

std::uint32_t CosetTable::trace(std::size_t coset, const Word& w) const {
  auto c = static_cast<std::uint32_t>(coset);
  for (int letter : w) c = act(c, letter);
  return c;
}

namespace {

constexpr std::int32_t kNone = -1;

class Enumerator {
 public:
  Enumerator(const GroupPresentation& pres, std::size_t limit) : limit_(limit) {
    gens_ = pres.generator_count();
    involutions_ = pres.kind == GroupKind::reflection;
    cols_ = involutions_ ? gens_ : 2 * gens_;
    inv_.resize(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) inv_[static_cast<std::size_t>(c)] = involutions_ ? c : (c < gens_ ? c + gens_ : c - gens_);

    // Every cyclic conjugate of every relator and its inverse, bucketed by
    // first column; relator order is kept so scans follow the input order.
    by_first_.resize(static_cast<std::size_t>(cols_));
    std::set<std::vector<int>> seen;
    for (const Word& r : pres.relators) {
      for (const Word& form : {r, inverse_word(r)}) {
        std::vector<int> w = to_columns(reduce_word(form, pres.kind));
        for (std::size_t s = 0; s < w.size(); ++s) {
          std::vector<int> c(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
          c.insert(c.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
          if (seen.insert(c).second) by_first_[static_cast<std::size_t>(c[0])].push_back(c);
        }
      }
    }
    for (const Word& r : pres.relators) relators_.push_back(to_columns(reduce_word(r, pres.kind)));
    new_coset();
  }

  std::vector<int> to_columns(const Word& w) const {
    std::vector<int> out;
    for (int letter : w) {
      const int g = std::abs(letter) - 1;
      out.push_back(letter > 0 || involutions_ ? g : g + gens_);
    }
    return out;
  }

  void fill_subgroup(const std::vector<Word>& subgroup, GroupKind kind) {
    for (const Word& s : subgroup) scan_and_fill(0, to_columns(reduce_word(s, kind)));
    process_deductions();
  }

  void run() {
    for (;;) {
      for (std::size_t c = 0; c < parent_.size(); ++c) {
        for (int x = 0; x < cols_; ++x) {
          if (!alive(c)) break;
          if (cell(c, x) == kNone) {
            define(static_cast<std::int32_t>(c), x);
            process_deductions();
          }
        }
      }
      if (complete_and_consistent()) return;
    }
  }

  CosetTable standardized() const {
    // Renumber live cosets in breadth-first order from coset 0.
    std::vector<std::int32_t> number(parent_.size(), kNone);
    std::vector<std::int32_t> order{0};
    number[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (int x = 0; x < cols_; ++x) {
        std::int32_t y = cell(static_cast<std::size_t>(order[h]), x);
        if (number[static_cast<std::size_t>(y)] == kNone) {
          number[static_cast<std::size_t>(y)] = static_cast<std::int32_t>(order.size());
          order.push_back(y);
        }
      }
    }
    CosetTable t;
    t.generators = gens_;
    t.columns = cols_;
    t.coset_count = order.size();
    t.entries.resize(order.size() * static_cast<std::size_t>(cols_));
    for (std::size_t r = 0; r < order.size(); ++r) {
      for (int x = 0; x < cols_; ++x) {
        t.entries[r * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)] =
            static_cast<std::uint32_t>(number[static_cast<std::size_t>(cell(static_cast<std::size_t>(order[r]), x))]);
      }
    }
    return t;
  }

  EnumerationStats stats;

 private:
  std::int32_t& cell(std::size_t c, int x) { return table_[c * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)]; }
  std::int32_t cell(std::size_t c, int x) const { return table_[c * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }
  int inv(int x) const { return inv_[static_cast<std::size_t>(x)]; }

  std::int32_t new_coset() {
    if (live_ >= limit_) {
      throw LimitError("coset limit " + std::to_string(limit_) + " exceeded");
    }
    // Dead rows are never reused; bound them too.
    if (parent_.size() >= 8 * limit_ + 1'000'000) {
      throw LimitError("coset table storage exhausted before completion");
    }
    const auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), kNone);
    ++live_;
    ++stats.defined;
    stats.max_live = std::max(stats.max_live, live_);
    return c;
  }

  void define(std::int32_t a, int x) {
    const std::int32_t b = new_coset();
    cell(static_cast<std::size_t>(a), x) = b;
    cell(static_cast<std::size_t>(b), inv(x)) = a;
    deductions_.emplace_back(a, x);
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b, std::vector<std::int32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    ++stats.coincidences;
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::int32_t dead = queue[h];
      for (int x = 0; x < cols_; ++x) {
        const std::int32_t d = cell(static_cast<std::size_t>(dead), x);
        if (d == kNone) continue;
        if (cell(static_cast<std::size_t>(d), inv(x)) == dead) cell(static_cast<std::size_t>(d), inv(x)) = kNone;
        const std::int32_t mu = rep(dead), nu = rep(d);
        if (cell(static_cast<std::size_t>(mu), x) != kNone) {
          merge(nu, cell(static_cast<std::size_t>(mu), x), queue);
        } else if (cell(static_cast<std::size_t>(nu), inv(x)) != kNone) {
          merge(mu, cell(static_cast<std::size_t>(nu), inv(x)), queue);
        } else {
          cell(static_cast<std::size_t>(mu), x) = nu;
          cell(static_cast<std::size_t>(nu), inv(x)) = mu;
          deductions_.emplace_back(mu, x);
        }
      }
    }
  }

  // Felsch scan of relator conjugate w at coset a; fills a single gap.
  void scan(std::int32_t a, const std::vector<int>& w) {
    const auto len = static_cast<std::ptrdiff_t>(w.size());
    std::int32_t f = a;
    std::ptrdiff_t i = 0;
    while (i < len) {
      std::int32_t next = cell(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]);
      if (next == kNone) break;
      f = next;
      ++i;
    }
    if (i == len) {
      if (f != a) coincidence(f, a);
      return;
    }
    std::int32_t b = a;
    std::ptrdiff_t j = len - 1;
    while (j >= i) {
      std::int32_t next = cell(static_cast<std::size_t>(b), inv(w[static_cast<std::size_t>(j)]));
      if (next == kNone) break;
      b = next;
      --j;
    }
    if (j < i) {
      if (f != b) coincidence(f, b);
    } else if (j == i) {
      const int x = w[static_cast<std::size_t>(i)];
      cell(static_cast<std::size_t>(f), x) = b;
      cell(static_cast<std::size_t>(b), inv(x)) = f;
      deductions_.emplace_back(f, x);
    }
  }

  void scan_and_fill(std::int32_t a, const std::vector<int>& w) {
    for (;;) {
      const auto len = static_cast<std::ptrdiff_t>(w.size());
      std::int32_t f = a;
      std::ptrdiff_t i = 0;
      while (i < len && cell(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) != kNone) {
        f = cell(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i == len) {
        if (f != a) coincidence(f, a);
        return;
      }
      std::int32_t b = a;
      std::ptrdiff_t j = len - 1;
      while (j >= i && cell(static_cast<std::size_t>(b), inv(w[static_cast<std::size_t>(j)])) != kNone) {
        b = cell(static_cast<std::size_t>(b), inv(w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i) {
        const int x = w[static_cast<std::size_t>(i)];
        cell(static_cast<std::size_t>(f), x) = b;
        cell(static_cast<std::size_t>(b), inv(x)) = f;
        deductions_.emplace_back(f, x);
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [a, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(static_cast<std::size_t>(a))) continue;
      for (const auto& w : by_first_[static_cast<std::size_t>(x)]) {
        if (!alive(static_cast<std::size_t>(a))) break;
        scan(a, w);
      }
      if (!alive(static_cast<std::size_t>(a))) continue;
      const std::int32_t b = cell(static_cast<std::size_t>(a), x);
      if (b == kNone || !alive(static_cast<std::size_t>(b))) continue;
      for (const auto& w : by_first_[static_cast<std::size_t>(inv(x))]) {
        if (!alive(static_cast<std::size_t>(b))) break;
        scan(b, w);
      }
    }
  }

  // Final pass: every relator must close at every live coset.
  bool complete_and_consistent() {
    bool clean = true;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        if (cell(c, x) == kNone) return false;
      }
    }
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& w : relators_) {
        if (!alive(c)) break;
        std::int32_t f = static_cast<std::int32_t>(c);
        for (int x : w) f = cell(static_cast<std::size_t>(f), x);
        if (f != static_cast<std::int32_t>(c)) {
          clean = false;
          coincidence(f, static_cast<std::int32_t>(c));
          process_deductions();
        }
      }
    }
    return clean;
  }

  std::size_t limit_;
  int gens_ = 0;
  int cols_ = 0;
  bool involutions_ = false;
  std::vector<int> inv_;
  std::vector<std::vector<std::vector<int>>> by_first_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::size_t live_ = 0;
  std::vector<std::pair<std::int32_t, int>> deductions_;
};

}  // namespace

CosetTable coset_enumerate(const GroupPresentation& pres, const std::vector<Word>& subgroup,
                           std::size_t limit, EnumerationStats* stats) {
  if (limit < 1) throw PreconditionError("coset limit must be >= 1");
  Enumerator e(pres, limit);
  e.fill_subgroup(subgroup.empty() ? pres.subgroup : subgroup, pres.kind);
  e.run();
  if (stats) *stats = e.stats;
  return e.standardized();
}

CosetTable coset_enumerate(const GroupPresentation& pres, std::size_t limit, EnumerationStats* stats) {
  return coset_enumerate(pres, {}, limit, stats);
}

}  // namespace hpoly
