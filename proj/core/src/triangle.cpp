#include "levy/triangle.hpp"

#include <stdexcept>

namespace levy {

LatticeTriangle LatticeTriangle::from_vertices(std::int32_t level, const DyadicPoint& a,
                                               const DyadicPoint& b, const DyadicPoint& c) {
    // The hypotenuse is the unique longest edge; the vertex opposite it is
    // the top. Squared lengths are exact, so these comparisons are too.
    const Dyadic ab = squared_distance(a, b);
    const Dyadic bc = squared_distance(b, c);
    const Dyadic ca = squared_distance(c, a);

    DyadicPoint top, u, v;
    if (ab > bc && ab > ca) {
        top = c; u = a; v = b;
    } else if (bc > ab && bc > ca) {
        top = a; u = b; v = c;
    } else if (ca > ab && ca > bc) {
        top = b; u = c; v = a;
    } else {
        throw std::invalid_argument("from_vertices: no unique longest edge");
    }

    // left -> top -> right must run clockwise (negative signed area).
    LatticeTriangle t{level, u, top, v};
    if (t.signed_area_doubled().sign() >= 0) {
        t.left = v;
        t.right = u;
    }
    if (t.signed_area_doubled().sign() >= 0)
        throw std::invalid_argument("from_vertices: degenerate vertex triple");
    return t;
}

}  // namespace levy
