#pragma once

#include <array>
#include <cstdint>

#include "levy/dyadic.hpp"

namespace levy {

/// A triangle of the level-k triangulation of the plane into right
/// isosceles triangles. `top` is the right-angle vertex opposite the
/// hypotenuse; traversing the boundary clockwise (standard orientation,
/// y up, so signed area negative) visits left, top, right in that order.
///
/// Identity is by exact value. Vertex roles are a function of the vertex
/// set, so triangles that are equal as point sets compare equal.
struct LatticeTriangle {
    std::int32_t level = 0;
    DyadicPoint left;
    DyadicPoint top;
    DyadicPoint right;

    friend bool operator==(const LatticeTriangle& a, const LatticeTriangle& b) {
        return a.level == b.level && a.left == b.left && a.top == b.top && a.right == b.right;
    }
    friend bool operator!=(const LatticeTriangle& a, const LatticeTriangle& b) { return !(a == b); }

    DyadicPoint hypotenuse_midpoint() const { return midpoint(left, right); }

    /// Twice the signed area (shoelace); negative for a valid triangle.
    Dyadic signed_area_doubled() const {
        return cross(top - left, right - left);
    }

    bool has_vertex(const DyadicPoint& p) const {
        return left == p || top == p || right == p;
    }

    /// Builds a triangle from an unordered vertex triple, deriving the
    /// roles: top is the vertex opposite the longest edge, left/right are
    /// assigned so the boundary traversal left->top->right is clockwise.
    /// The triple must form a lattice right isosceles triangle.
    static LatticeTriangle from_vertices(std::int32_t level, const DyadicPoint& a,
                                         const DyadicPoint& b, const DyadicPoint& c);
};

struct TriangleHash {
    std::size_t operator()(const LatticeTriangle& t) const {
        DyadicPointHash ph;
        std::size_t h = hash_mix(0, static_cast<std::uint64_t>(t.level));
        h = hash_mix(h, ph(t.left));
        h = hash_mix(h, ph(t.top));
        return hash_mix(h, ph(t.right));
    }
};

inline constexpr int kStarSize = 15;

/// The 15 triangles of the triangulation meeting a given triangle, in the
/// canonical order: entry 1 is the triangle itself; 2..8 circle the left
/// vertex clockwise (8 shares the left edge); 9 sits above the top vertex;
/// 10 shares the right edge; 11..15 circle the right vertex clockwise.
struct Star {
    std::array<LatticeTriangle, kStarSize> slots;

    /// 1-based access matching the canonical numbering.
    const LatticeTriangle& entry(int index) const {
        assert(index >= 1 && index <= kStarSize);
        return slots[static_cast<std::size_t>(index - 1)];
    }
};

}  // namespace levy
