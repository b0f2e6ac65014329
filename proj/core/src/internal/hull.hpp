#pragma once

#include <array>
#include <vector>

#include "hpoly/face_poset.hpp"

namespace hpoly::internal {

using Point = std::array<double, 3>;

/// Face lattice of the convex hull of points in general convex position
/// (every point a vertex). Faces come from supporting planes; edges are the
/// vertex pairs shared by two faces.
FacePoset convex_polyhedron(const std::vector<Point>& points);

/// All coordinate permutations of the given triples, with the given sign
/// patterns applied, deduplicated.
std::vector<Point> expand_points(const std::vector<Point>& seeds, bool all_permutations, bool even_signs_only);

}  // namespace hpoly::internal
