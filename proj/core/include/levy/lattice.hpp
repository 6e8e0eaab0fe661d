#pragma once

#include <optional>
#include <utility>

#include "levy/triangle.hpp"

namespace levy {

/// The base triangle: vertices (0,0), (1/2,1/2), (1,0) at level 0.
LatticeTriangle base_triangle();

/// Splits t along the segment from the hypotenuse midpoint to the top
/// vertex. First child contains t's left vertex, second its right vertex;
/// both are one level deeper and their union is t.
std::pair<LatticeTriangle, LatticeTriangle> subdivide(const LatticeTriangle& t);

/// The two triangles of the next level lying *outside* t: the first has
/// t's left edge as its hypotenuse, the second t's right edge, and each
/// has its top vertex strictly outside t.
std::pair<LatticeTriangle, LatticeTriangle> exterior_children(const LatticeTriangle& t);

/// Neighbor sharing t's hypotenuse (together they form a square).
LatticeTriangle hypotenuse_neighbor(const LatticeTriangle& t);

/// Neighbor sharing t's left edge; that edge is the neighbor's right edge.
LatticeTriangle left_edge_neighbor(const LatticeTriangle& t);

/// Neighbor sharing t's right edge; that edge is the neighbor's left edge.
LatticeTriangle right_edge_neighbor(const LatticeTriangle& t);

/// The 15 triangles of t's level meeting t, in the canonical order.
Star star(const LatticeTriangle& t);

/// Index i in 1..15 with star(center).entry(i) == other, or nullopt when
/// the two triangles do not meet. Throws std::invalid_argument on a level
/// mismatch.
std::optional<int> star_membership_index(const LatticeTriangle& center,
                                         const LatticeTriangle& other);

/// Translation by an integer vector; the triangulation of every level is
/// invariant under these.
LatticeTriangle translated(const LatticeTriangle& t, std::int64_t dx, std::int64_t dy);

/// Exact point-in-triangle test (boundary counts as inside).
bool contains_point(const LatticeTriangle& t, const DyadicPoint& p);

/// Exact strict-interior test.
bool contains_point_strictly(const LatticeTriangle& t, const DyadicPoint& p);

}  // namespace levy
