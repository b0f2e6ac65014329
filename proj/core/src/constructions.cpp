#include "hpoly/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "hpoly/error.hpp"
#include "hpoly/flag_graph.hpp"
#include "hpoly/symmetry.hpp"
#include "hpoly/validate.hpp"

namespace hpoly {

namespace {

using CoverLists = std::vector<std::vector<FaceIndex>>;

std::vector<FaceIndex> intersect(std::span<const FaceIndex> a, std::span<const FaceIndex> b) {
  std::vector<FaceIndex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FaceIndex other_end(const FacePoset& p, FaceIndex edge, FaceIndex v) {
  auto ends = p.covers(1, edge);
  return ends[0] == v ? ends[1] : ends[0];
}

void require_rank(const FacePoset& p, int rank, const char* what) {
  if (p.rank() != rank) {
    throw PreconditionError(std::string(what) + " needs rank " + std::to_string(rank) + ", got " +
                            std::to_string(p.rank()));
  }
}

void require_flag_count(const FacePoset& out, std::size_t expected, const char* what) {
  const std::size_t got = out.count_flags();
  if (got != expected) {
    throw Error(std::string(what) + ": expected " + std::to_string(expected) + " flags, got " + std::to_string(got));
  }
}

bool vertex_transitive(const FacePoset& p, const Limits& limits) {
  return transitivity(flag_graph(p, limits), 0, TransitivityMode::face);
}

}  // namespace

FacePoset medial(const FacePoset& p, const Limits& limits) {
  require_rank(p, 3, "medial");
  require_valid(p, "medial input", limits);
  CoverLists edges;
  CoverLists from_faces(p.face_count(2)), from_vertices(p.vertex_count());
  for (FaceIndex f = 0; f < p.face_count(2); ++f) {
    for (FaceIndex v : p.vertex_set(2, f)) {
      const auto id = static_cast<FaceIndex>(edges.size());
      edges.push_back(intersect(p.covers(2, f), p.covered_by(0, v)));
      from_faces[f].push_back(id);
      from_vertices[v].push_back(id);
    }
  }
  CoverLists faces = std::move(from_faces);
  faces.insert(faces.end(), from_vertices.begin(), from_vertices.end());
  FacePoset out = canonicalize(build_poset(p.face_count(1), {std::move(edges), std::move(faces)}));
  require_valid(out, "medial", limits);
  require_flag_count(out, 2 * p.count_flags(), "medial");
  return out;
}

FacePoset halved(const FacePoset& p, const Limits& limits) {
  require_rank(p, 3, "halved");
  require_valid(p, "halved input", limits);
  auto type = schlafli_type(p);
  if (!type || (*type)[0] % 2 != 0 || (*type)[0] < 4) {
    throw PreconditionError("halved needs an equivelar polyhedron of type {2m,q}");
  }
  const int m = (*type)[0] / 2;
  auto colors = edge_bipartition(p);
  if (!colors) throw PreconditionError("edge graph is not bipartite");
  if (!vertex_transitive(p, limits)) throw PreconditionError("halved needs a vertex-transitive polyhedron");

  std::vector<FaceIndex> yellow_index(p.vertex_count(), 0);
  std::size_t yellow = 0;
  for (FaceIndex v = 0; v < p.vertex_count(); ++v) {
    if ((*colors)[v] == VertexColor::yellow) yellow_index[v] = static_cast<FaceIndex>(yellow++);
  }
  auto is_red = [&](FaceIndex v) { return (*colors)[v] == VertexColor::red; };

  CoverLists edges;
  CoverLists red_faces(p.vertex_count()), gon_faces;
  if (m == 2) {
    // Each square contributes its yellow diagonal.
    for (FaceIndex f = 0; f < p.face_count(2); ++f) {
      std::vector<FaceIndex> ys;
      const auto id = static_cast<FaceIndex>(edges.size());
      for (FaceIndex v : p.vertex_set(2, f)) {
        if (is_red(v)) {
          red_faces[v].push_back(id);
        } else {
          ys.push_back(yellow_index[v]);
        }
      }
      edges.push_back(std::move(ys));
    }
  } else {
    gon_faces.resize(p.face_count(2));
    for (FaceIndex f = 0; f < p.face_count(2); ++f) {
      for (FaceIndex r : p.vertex_set(2, f)) {
        if (!is_red(r)) continue;
        std::vector<FaceIndex> ys;
        for (FaceIndex e : intersect(p.covers(2, f), p.covered_by(0, r))) {
          ys.push_back(yellow_index[other_end(p, e, r)]);
        }
        const auto id = static_cast<FaceIndex>(edges.size());
        edges.push_back(std::move(ys));
        red_faces[r].push_back(id);
        gon_faces[f].push_back(id);
      }
    }
  }
  CoverLists faces;
  for (FaceIndex v = 0; v < p.vertex_count(); ++v) {
    if (is_red(v)) faces.push_back(std::move(red_faces[v]));
  }
  faces.insert(faces.end(), gon_faces.begin(), gon_faces.end());
  FacePoset out = canonicalize(build_poset(yellow, {std::move(edges), std::move(faces)}));
  require_valid(out, "halved", limits);
  return out;
}

FacePoset two_power(const FacePoset& k, const TwoPowerOptions& options, const Limits& limits) {
  const std::size_t v = k.vertex_count();
  if (v > options.max_vertices || v > 30) {
    throw LimitError("2^K needs " + std::to_string(v) + " vertex bits, limit is " +
                     std::to_string(options.max_vertices));
  }
  require_valid(k, "2^K input", limits);
  if (!is_describable(k, Describability::vertex)) throw PreconditionError("2^K needs a vertex-describable input");
  const std::size_t expected_flags = (std::size_t{1} << v) * k.count_flags();
  if (expected_flags > limits.max_flags) {
    throw LimitError("2^K would have " + std::to_string(expected_flags) + " flags");
  }

  const int n = k.rank();
  const std::uint32_t all = v == 32 ? ~0u : (std::uint32_t{1} << v) - 1;
  // masks[j][F]: vertex set of the rank-j face F of K; rank -1 is the empty face.
  std::vector<std::vector<std::uint32_t>> masks(static_cast<std::size_t>(n) + 1);
  masks[0] = {0};
  for (int j = 0; j < n; ++j) {
    auto& row = masks[static_cast<std::size_t>(j) + 1];
    for (FaceIndex f = 0; f < k.face_count(j); ++f) {
      std::uint32_t m = 0;
      for (FaceIndex x : k.vertex_set(j, f)) m |= std::uint32_t{1} << x;
      row.push_back(m);
    }
  }
  // Face F(e) is indexed by F's block offset plus e compressed onto the
  // coordinates outside F (e is zero on F).
  std::vector<std::vector<std::size_t>> offset(masks.size());
  for (std::size_t j = 0; j < masks.size(); ++j) {
    std::size_t total = 0;
    for (std::uint32_t m : masks[j]) {
      offset[j].push_back(total);
      total += std::size_t{1} << (v - static_cast<std::size_t>(std::popcount(m)));
    }
    offset[j].push_back(total);
  }
  auto compress = [&](std::uint32_t e, std::uint32_t free) {
    std::uint32_t out = 0, bit = 1;
    for (std::uint32_t f = free; f; f &= f - 1) {
      if (e & (f & -f)) out |= bit;
      bit <<= 1;
    }
    return out;
  };
  auto index = [&](std::size_t j, std::size_t f, std::uint32_t e) {
    return static_cast<FaceIndex>(offset[j][f] + compress(e, all & ~masks[j][f]));
  };

  std::vector<CoverLists> covers(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto jj = static_cast<std::size_t>(j) + 1;  // masks row of K's rank-j faces
    auto& lists = covers[static_cast<std::size_t>(j)];
    lists.resize(offset[jj].back());
    for (FaceIndex f = 0; f < k.face_count(j); ++f) {
      const std::uint32_t mf = masks[jj][f];
      const std::uint32_t outside = all & ~mf;
      std::vector<std::pair<std::size_t, std::uint32_t>> below;  // (face, mask) covered by f
      if (j == 0) {
        below.emplace_back(0, 0);
      } else {
        for (FaceIndex g : k.covers(j, f)) below.emplace_back(g, masks[jj - 1][g]);
      }
      // Enumerate e over subsets of `outside` in increasing order.
      std::uint32_t e = 0;
      do {
        auto& list = lists[index(jj, f, e)];
        for (auto [g, mg] : below) {
          const std::uint32_t free = mf & ~mg;
          std::uint32_t x = 0;
          do {
            list.push_back(index(jj - 1, g, e | x));
            x = (x - free) & free;
          } while (x);
        }
        e = (e - outside) & outside;
      } while (e);
    }
  }
  FacePoset out = canonicalize(build_poset(std::size_t{1} << v, std::move(covers)));
  require_valid(out, "2^K", limits);
  require_flag_count(out, expected_flags, "2^K");
  if (options.check) {
    const std::size_t gk = automorphisms(flag_graph(k, limits)).order();
    const std::size_t gout = automorphisms(flag_graph(out, limits)).order();
    if (gout != (std::size_t{1} << v) * gk) {
      throw Error("2^K group order " + std::to_string(gout) + " != 2^" + std::to_string(v) + " * " +
                  std::to_string(gk));
    }
  }
  return out;
}

FacePoset chiral_extension(const FacePoset& q, const TwoPowerOptions& options, const Limits& limits) {
  require_valid(q, "chiral extension input", limits);
  if (flag_orbits(flag_graph(q, limits)).verdict != Verdict::chiral) {
    throw PreconditionError("chiral extension needs a chiral polytope");
  }
  if (!is_describable(q, Describability::facet)) {
    throw PreconditionError("chiral extension needs a facet-describable polytope");
  }
  return canonicalize(dual(two_power(dual(q), options, limits)));
}

std::string AlternatingPreconditionReport::describe() const {
  std::ostringstream out;
  out << "bipartite=" << bipartite << " vertex-describable=" << vertex_describable_P
      << " vertex-figures-describable=" << vertex_describable_L << " square-facets=" << square_facets
      << " vertex-transitive-facets=" << vertex_transitive_facets;
  if (opposite_vertex_clash) {
    const auto& c = *opposite_vertex_clash;
    out << " clash: vertices " << c.vertex_u << " and " << c.vertex_v << " are opposite in 2-faces "
        << c.face_a << " and " << c.face_b;
  }
  return out.str();
}

AlternatingPreconditionReport alternating_preconditions(const FacePoset& p, const Limits& limits) {
  require_rank(p, 4, "alternating");
  require_valid(p, "alternating input", limits);
  AlternatingPreconditionReport r;
  r.bipartite = edge_bipartition(p).has_value();
  r.vertex_describable_P = is_describable(p, Describability::vertex);
  r.vertex_describable_L = true;
  for (FaceIndex v = 0; v < p.vertex_count() && r.vertex_describable_L; ++v) {
    r.vertex_describable_L = is_describable(co_face(p, 0, v), Describability::vertex);
  }

  r.square_facets = true;
  r.vertex_transitive_facets = true;
  for (FaceIndex f = 0; f < p.facet_count(); ++f) {
    FacePoset facet = face_section(p, 3, f);
    auto type = schlafli_type(facet);
    if (!type || (*type)[0] != 4) {
      r.square_facets = false;
      r.vertex_transitive_facets = false;
      break;
    }
    if (!vertex_transitive(facet, limits)) r.vertex_transitive_facets = false;
  }

  if (r.square_facets) {
    // Diagonals of the squares, keyed by vertex pair.
    std::map<std::pair<FaceIndex, FaceIndex>, FaceIndex> seen;
    for (FaceIndex s = 0; s < p.face_count(2) && !r.opposite_vertex_clash; ++s) {
      auto vs = p.vertex_set(2, s);
      for (FaceIndex a : vs) {
        std::vector<FaceIndex> nbrs;
        for (FaceIndex e : intersect(p.covers(2, s), p.covered_by(0, a))) nbrs.push_back(other_end(p, e, a));
        for (FaceIndex b : vs) {
          if (b <= a || std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end()) continue;
          auto [it, fresh] = seen.emplace(std::make_pair(a, b), s);
          if (!fresh) {
            r.opposite_vertex_clash = OppositeVertexClash{it->second, s, a, b};
            break;
          }
        }
        if (r.opposite_vertex_clash) break;
      }
    }
  }
  return r;
}

AlternatingResult alternating(const FacePoset& p, const Limits& limits) {
  AlternatingPreconditionReport pre = alternating_preconditions(p, limits);
  if (!pre.ok()) throw PreconditionError("alternating preconditions fail: " + pre.describe());
  auto colors = *edge_bipartition(p);
  std::vector<FaceIndex> yellow_index(p.vertex_count(), 0);
  std::size_t yellow = 0;
  for (FaceIndex v = 0; v < p.vertex_count(); ++v) {
    if (colors[v] == VertexColor::yellow) yellow_index[v] = static_cast<FaceIndex>(yellow++);
  }
  auto is_red = [&](FaceIndex v) { return colors[v] == VertexColor::red; };
  auto neighbours = [&](FaceIndex v, const std::vector<FaceIndex>& edges_in) {
    std::vector<FaceIndex> out;
    for (FaceIndex e : intersect(p.covered_by(0, v), edges_in)) out.push_back(yellow_index[other_end(p, e, v)]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  auto edges_below = [&](int r, FaceIndex f) {
    std::vector<FaceIndex> es{f};
    for (int k = r; k > 1; --k) {
      std::vector<FaceIndex> next;
      for (FaceIndex g : es) {
        auto c = p.covers(k, g);
        next.insert(next.end(), c.begin(), c.end());
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      es = std::move(next);
    }
    return es;
  };

  // Edges are the squares (their yellow diagonals), 2-faces the pairs (red v,
  // facet F) with v in F, facets the facets of p and the red vertices. The
  // covers follow the construction rather than raw vertex-set inclusion:
  // in small quotients the yellow neighbours of a red vertex can also span
  // the diagonal of an unrelated square. Where inclusion is unambiguous the
  // two agree (checked below).
  CoverLists edge_sets(p.face_count(2));
  for (FaceIndex s = 0; s < p.face_count(2); ++s) {
    for (FaceIndex v : p.vertex_set(2, s)) {
      if (!is_red(v)) edge_sets[s].push_back(yellow_index[v]);
    }
  }
  CoverLists ridge_covers, facet_covers(p.facet_count());
  std::vector<std::vector<FaceIndex>> ridge_sets;
  std::vector<std::vector<FaceIndex>> ridges_at_red(p.vertex_count());
  std::vector<AlternatingFacet> kinds(p.facet_count(), AlternatingFacet::halved_facet);
  for (FaceIndex f = 0; f < p.facet_count(); ++f) {
    const auto squares = edges_below(3, f);
    std::vector<FaceIndex> in_f;
    for (FaceIndex g : p.covers(3, f)) in_f.push_back(g);
    std::sort(in_f.begin(), in_f.end());
    for (FaceIndex v : p.vertex_set(3, f)) {
      if (!is_red(v)) continue;
      const auto id = static_cast<FaceIndex>(ridge_covers.size());
      std::vector<FaceIndex> cov;
      for (FaceIndex s : in_f) {
        const auto vs = p.vertex_set(2, s);
        if (std::binary_search(vs.begin(), vs.end(), v)) cov.push_back(s);
      }
      ridge_covers.push_back(std::move(cov));
      ridge_sets.push_back(neighbours(v, squares));
      facet_covers[f].push_back(id);
      ridges_at_red[v].push_back(id);
    }
  }
  for (FaceIndex v = 0; v < p.vertex_count(); ++v) {
    if (!is_red(v)) continue;
    facet_covers.push_back(ridges_at_red[v]);
    kinds.push_back(AlternatingFacet::vertex_figure);
  }
  std::size_t ambiguous = 0;
  for (std::size_t r = 0; r < ridge_sets.size(); ++r) {
    std::size_t inside = 0;
    for (const auto& e : edge_sets) {
      if (std::includes(ridge_sets[r].begin(), ridge_sets[r].end(), e.begin(), e.end())) ++inside;
    }
    if (inside != ridge_covers[r].size()) ++ambiguous;
  }
  AlternatingResult result;
  result.ambiguous_ridges = ambiguous;
  FacePoset raw = build_poset(yellow, {edge_sets, ridge_covers, facet_covers});
  require_valid(raw, "alternating", limits);
  require_flag_count(raw, p.count_flags(), "alternating");

  // Every 2-face joins one facet of each kind; with the diamond condition
  // this makes the four facets around an edge alternate.
  for (FaceIndex r = 0; r < raw.face_count(2); ++r) {
    auto up = raw.covered_by(2, r);
    if (up.size() != 2 || kinds[up[0]] == kinds[up[1]]) {
      throw Error("alternating: facets around a 2-face do not alternate");
    }
  }
  for (FaceIndex e = 0; e < raw.face_count(1); ++e) {
    if (raw.facet_set(1, e).size() != 4) throw Error("alternating: an edge does not lie in four facets");
  }

  // Canonical order, carrying facet kinds along.
  std::vector<FaceIndex> perm;
  result.poset = canonicalize(raw, &perm);
  result.facet_kind.resize(kinds.size());
  for (FaceIndex f = 0; f < kinds.size(); ++f) result.facet_kind[perm[f]] = kinds[f];
  return result;
}

}  // namespace hpoly
