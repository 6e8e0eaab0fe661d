#pragma once

#include <random>

#include "levy/lattice.hpp"

namespace levy::test {

inline DyadicPoint pt(std::int64_t xn, std::int32_t xe, std::int64_t yn, std::int32_t ye) {
    return {Dyadic(xn, xe), Dyadic(yn, ye)};
}

inline DyadicPoint ipt(std::int64_t x, std::int64_t y) {
    return {Dyadic::from_int(x), Dyadic::from_int(y)};
}

/// Random lattice triangle reached from the base triangle by `depth`
/// child steps (of either kind) and an integer translation. The result
/// has level == depth.
inline LatticeTriangle random_triangle(std::mt19937& rng, int depth) {
    LatticeTriangle t = base_triangle();
    std::uniform_int_distribution<int> op(0, 3);
    for (int i = 0; i < depth; ++i) {
        switch (op(rng)) {
            case 0: t = subdivide(t).first; break;
            case 1: t = subdivide(t).second; break;
            case 2: t = exterior_children(t).first; break;
            default: t = exterior_children(t).second; break;
        }
    }
    std::uniform_int_distribution<std::int64_t> shift(-3, 3);
    return translated(t, shift(rng), shift(rng));
}

inline bool shares_vertex(const LatticeTriangle& a, const LatticeTriangle& b) {
    return a.has_vertex(b.left) || a.has_vertex(b.top) || a.has_vertex(b.right);
}

/// Unordered segment equality.
inline bool same_segment(const DyadicPoint& a1, const DyadicPoint& a2, const DyadicPoint& b1,
                         const DyadicPoint& b2) {
    return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

}  // namespace levy::test
