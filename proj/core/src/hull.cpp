#include "internal/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hpoly/error.hpp"

namespace hpoly::internal {

namespace {

constexpr double kEps = 1e-9;

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

FacePoset convex_polyhedron(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::set<std::vector<FaceIndex>> faces;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        Point normal = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
        if (dot(normal, normal) < kEps) continue;
        const double d = dot(normal, pts[a]);
        int above = 0, below = 0;
        std::vector<FaceIndex> on;
        for (std::size_t x = 0; x < n; ++x) {
          const double s = dot(normal, pts[x]) - d;
          if (s > kEps) {
            ++above;
          } else if (s < -kEps) {
            ++below;
          } else {
            on.push_back(static_cast<FaceIndex>(x));
          }
        }
        if (above == 0 || below == 0) faces.insert(on);
      }
    }
  }
  std::vector<std::vector<FaceIndex>> face_list(faces.begin(), faces.end());
  std::map<std::pair<FaceIndex, FaceIndex>, int> shared;
  for (const auto& f : face_list) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) ++shared[{f[i], f[j]}];
    }
  }
  std::vector<std::vector<FaceIndex>> edges;
  for (const auto& [pair, count] : shared) {
    if (count == 2) edges.push_back({pair.first, pair.second});
    if (count > 2) throw Error("hull: vertex pair on more than two faces");
  }
  std::vector<std::vector<FaceIndex>> face_covers;
  for (const auto& f : face_list) {
    std::vector<FaceIndex> cov;
    for (FaceIndex e = 0; e < edges.size(); ++e) {
      if (std::binary_search(f.begin(), f.end(), edges[e][0]) && std::binary_search(f.begin(), f.end(), edges[e][1])) {
        cov.push_back(e);
      }
    }
    face_covers.push_back(std::move(cov));
  }
  return canonicalize(build_poset(n, {std::move(edges), std::move(face_covers)}));
}

std::vector<Point> expand_points(const std::vector<Point>& seeds, bool all_permutations, bool even_signs_only) {
  std::set<std::array<long long, 3>> seen;
  std::vector<Point> out;
  auto key = [](const Point& p) {
    return std::array<long long, 3>{std::llround(p[0] * 1e6), std::llround(p[1] * 1e6), std::llround(p[2] * 1e6)};
  };
  for (const Point& s : seeds) {
    std::vector<std::array<int, 3>> orders = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    if (all_permutations) {
      orders.push_back({0, 2, 1});
      orders.push_back({2, 1, 0});
      orders.push_back({1, 0, 2});
    }
    for (const auto& o : orders) {
      for (int signs = 0; signs < 8; ++signs) {
        Point p{};
        int minus = 0;
        for (int i = 0; i < 3; ++i) {
          const double v = s[static_cast<std::size_t>(o[static_cast<std::size_t>(i)])];
          const bool neg = (signs >> i) & 1;
          if (neg && v != 0.0) ++minus;
          if (neg && v == 0.0) minus += 100;  // skip duplicate -0 patterns
          p[static_cast<std::size_t>(i)] = neg ? -v : v;
        }
        if (minus >= 100) continue;
        if (even_signs_only && minus % 2 != 0) continue;
        if (seen.insert(key(p)).second) out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hpoly::internal
