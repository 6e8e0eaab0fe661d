#include "levy/lattice.hpp"

#include <stdexcept>

namespace levy {

namespace {

/// Reflects z across the line through a and b. Every edge of the lattice
/// is axis-aligned or diagonal, so the four closed forms below are total
/// for our inputs and stay exactly dyadic.
DyadicPoint reflect_across(const DyadicPoint& z, const DyadicPoint& a, const DyadicPoint& b) {
    const Dyadic dx = b.x - a.x;
    const Dyadic dy = b.y - a.y;
    if (dx.is_zero()) {  // vertical line x = a.x
        return {a.x + a.x - z.x, z.y};
    }
    if (dy.is_zero()) {  // horizontal line y = a.y
        return {z.x, a.y + a.y - z.y};
    }
    if (dx == dy) {  // line y = x + c with c = a.y - a.x
        const Dyadic c = a.y - a.x;
        return {z.y - c, z.x + c};
    }
    if (dx == -dy) {  // line y = -x + c with c = a.y + a.x
        const Dyadic c = a.y + a.x;
        return {c - z.y, c - z.x};
    }
    throw std::invalid_argument("reflect_across: edge is neither axis-aligned nor diagonal");
}

}  // namespace

LatticeTriangle base_triangle() {
    return LatticeTriangle{0,
                           {Dyadic::from_int(0), Dyadic::from_int(0)},
                           {Dyadic(1, 1), Dyadic(1, 1)},
                           {Dyadic::from_int(1), Dyadic::from_int(0)}};
}

std::pair<LatticeTriangle, LatticeTriangle> subdivide(const LatticeTriangle& t) {
    const DyadicPoint m = t.hypotenuse_midpoint();
    // The child on the left edge has the old top as its left vertex; the
    // child on the right edge has the old right vertex as its left vertex.
    LatticeTriangle first{t.level + 1, t.top, m, t.left};
    LatticeTriangle second{t.level + 1, t.right, m, t.top};
    return {first, second};
}

std::pair<LatticeTriangle, LatticeTriangle> exterior_children(const LatticeTriangle& t) {
    const DyadicPoint m = t.hypotenuse_midpoint();
    // Each apex is the mirror image of the hypotenuse midpoint across the
    // corresponding leg, which lands strictly outside t.
    const DyadicPoint apex_left = t.left + t.top - m;
    const DyadicPoint apex_right = t.top + t.right - m;
    LatticeTriangle on_left_edge{t.level + 1, t.left, apex_left, t.top};
    LatticeTriangle on_right_edge{t.level + 1, t.top, apex_right, t.right};
    return {on_left_edge, on_right_edge};
}

LatticeTriangle hypotenuse_neighbor(const LatticeTriangle& t) {
    return LatticeTriangle{t.level, t.right, t.left + t.right - t.top, t.left};
}

LatticeTriangle left_edge_neighbor(const LatticeTriangle& t) {
    return LatticeTriangle{t.level, reflect_across(t.right, t.left, t.top), t.top, t.left};
}

LatticeTriangle right_edge_neighbor(const LatticeTriangle& t) {
    return LatticeTriangle{t.level, t.right, t.top, reflect_across(t.left, t.top, t.right)};
}

Star star(const LatticeTriangle& t) {
    Star s;
    s.slots[0] = t;
    // Entries 2..8 walk clockwise around the left vertex: across the
    // hypotenuse first, then alternating with the predecessor's right
    // edge, ending on the triangle that shares t's left edge.
    s.slots[1] = hypotenuse_neighbor(t);
    s.slots[2] = right_edge_neighbor(s.slots[1]);
    s.slots[3] = hypotenuse_neighbor(s.slots[2]);
    s.slots[4] = right_edge_neighbor(s.slots[3]);
    s.slots[5] = hypotenuse_neighbor(s.slots[4]);
    s.slots[6] = right_edge_neighbor(s.slots[5]);
    s.slots[7] = hypotenuse_neighbor(s.slots[6]);
    // Entry 9 closes the fan over the top vertex.
    s.slots[8] = left_edge_neighbor(s.slots[7]);
    // Entries 10..15 walk clockwise around the right vertex.
    s.slots[9] = right_edge_neighbor(t);
    s.slots[10] = hypotenuse_neighbor(s.slots[9]);
    s.slots[11] = right_edge_neighbor(s.slots[10]);
    s.slots[12] = hypotenuse_neighbor(s.slots[11]);
    s.slots[13] = right_edge_neighbor(s.slots[12]);
    s.slots[14] = hypotenuse_neighbor(s.slots[13]);
    return s;
}

std::optional<int> star_membership_index(const LatticeTriangle& center,
                                         const LatticeTriangle& other) {
    if (center.level != other.level)
        throw std::invalid_argument("star_membership_index: level mismatch");
    const Star s = star(center);
    for (int i = 1; i <= kStarSize; ++i)
        if (s.entry(i) == other) return i;
    return std::nullopt;
}

LatticeTriangle translated(const LatticeTriangle& t, std::int64_t dx, std::int64_t dy) {
    const DyadicPoint d{Dyadic::from_int(dx), Dyadic::from_int(dy)};
    return LatticeTriangle{t.level, t.left + d, t.top + d, t.right + d};
}

namespace {

/// For the clockwise vertex order the interior lies to the right of every
/// directed edge, i.e. each cross product is <= 0 (inclusive) or < 0
/// (strict).
bool contains_impl(const LatticeTriangle& t, const DyadicPoint& p, bool strict) {
    const DyadicPoint verts[3] = {t.left, t.top, t.right};
    for (int i = 0; i < 3; ++i) {
        const DyadicPoint& a = verts[i];
        const DyadicPoint& b = verts[(i + 1) % 3];
        const int side = cross(b - a, p - a).sign();
        if (side > 0 || (strict && side == 0)) return false;
    }
    return true;
}

}  // namespace

bool contains_point(const LatticeTriangle& t, const DyadicPoint& p) {
    return contains_impl(t, p, false);
}

bool contains_point_strictly(const LatticeTriangle& t, const DyadicPoint& p) {
    return contains_impl(t, p, true);
}

}  // namespace levy
