#include <doctest.h>

#include <set>
#include <unordered_set>
#include <vector>

#include "levy/dragon.hpp"
#include "levy/lattice.hpp"
#include "test_support.hpp"

using namespace levy;
using namespace levy::test;

TEST_CASE("base triangle") {
    const LatticeTriangle t = base_triangle();
    CHECK(t.level == 0);
    CHECK(t.left == ipt(0, 0));
    CHECK(t.top == pt(1, 1, 1, 1));
    CHECK(t.right == ipt(1, 0));
    CHECK(t.signed_area_doubled() == Dyadic(-1, 1));
}

TEST_CASE("from_vertices recovers roles") {
    const LatticeTriangle t = base_triangle();
    CHECK(LatticeTriangle::from_vertices(0, t.top, t.right, t.left) == t);
    CHECK(LatticeTriangle::from_vertices(0, t.right, t.left, t.top) == t);
    CHECK_THROWS_AS(LatticeTriangle::from_vertices(0, ipt(0, 0), ipt(1, 0), ipt(2, 0)),
                    std::invalid_argument);
}

TEST_CASE("subdivide the base triangle") {
    const auto [first, second] = subdivide(base_triangle());
    CHECK(first.level == 1);
    CHECK(first.left == pt(1, 1, 1, 1));
    CHECK(first.top == pt(1, 1, 0, 0));
    CHECK(first.right == ipt(0, 0));
    // second child pinned by its vertex set
    CHECK(second == LatticeTriangle::from_vertices(1, pt(1, 1, 1, 1), pt(1, 1, 0, 0), ipt(1, 0)));
}

TEST_CASE("subdivision children share exactly the midpoint-top segment") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const LatticeTriangle t = random_triangle(rng, i % 12);
        const auto [first, second] = subdivide(t);
        const DyadicPoint m = t.hypotenuse_midpoint();
        CHECK(first.has_vertex(m));
        CHECK(first.has_vertex(t.top));
        CHECK(second.has_vertex(m));
        CHECK(second.has_vertex(t.top));
        CHECK(first.has_vertex(t.left));
        CHECK_FALSE(first.has_vertex(t.right));
        CHECK(second.has_vertex(t.right));
        CHECK_FALSE(second.has_vertex(t.left));
    }
}

TEST_CASE("subdivision bisects the area exactly") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const LatticeTriangle t = random_triangle(rng, i % 14);
        const auto [first, second] = subdivide(t);
        CHECK(first.signed_area_doubled() == t.signed_area_doubled().half());
        CHECK(second.signed_area_doubled() == t.signed_area_doubled().half());
    }
}

TEST_CASE("exterior children of the base triangle are the map images") {
    const LatticeTriangle t = base_triangle();
    const auto [on_left, on_right] = exterior_children(t);
    CHECK(on_left == ifs_map(1, t));
    CHECK(on_right == ifs_map(2, t));
    CHECK(on_left == LatticeTriangle::from_vertices(1, ipt(0, 0), pt(0, 0, 1, 1), pt(1, 1, 1, 1)));
    CHECK(on_right == LatticeTriangle::from_vertices(1, pt(1, 1, 1, 1), pt(1, 0, 1, 1), ipt(1, 0)));
}

TEST_CASE("exterior children touch the parent exactly along its legs") {
    std::mt19937 rng(13);
    for (int i = 0; i < 50; ++i) {
        const LatticeTriangle t = random_triangle(rng, i % 12);
        const auto [on_left, on_right] = exterior_children(t);
        // hypotenuse of each child is the corresponding leg of t
        CHECK(same_segment(on_left.left, on_left.right, t.left, t.top));
        CHECK(same_segment(on_right.left, on_right.right, t.top, t.right));
        // apex strictly outside t
        CHECK_FALSE(contains_point(t, on_left.top));
        CHECK_FALSE(contains_point(t, on_right.top));
    }
}

TEST_CASE("child constructions commute with integer translation") {
    std::mt19937 rng(17);
    for (int i = 0; i < 40; ++i) {
        const LatticeTriangle t = random_triangle(rng, i % 10);
        const std::int64_t dx = static_cast<std::int64_t>(i % 5) - 2;
        const std::int64_t dy = static_cast<std::int64_t>(i % 7) - 3;
        const LatticeTriangle moved = translated(t, dx, dy);
        CHECK(exterior_children(moved).first == translated(exterior_children(t).first, dx, dy));
        CHECK(exterior_children(moved).second == translated(exterior_children(t).second, dx, dy));
        CHECK(subdivide(moved).first == translated(subdivide(t).first, dx, dy));
        CHECK(subdivide(moved).second == translated(subdivide(t).second, dx, dy));
    }
}

TEST_CASE("the full star of the base triangle") {
    const Star s = star(base_triangle());
    const auto tri = [](const DyadicPoint& a, const DyadicPoint& b, const DyadicPoint& c) {
        return LatticeTriangle::from_vertices(0, a, b, c);
    };
    const DyadicPoint h{Dyadic(1, 1), Dyadic(1, 1)};  // (1/2, 1/2)
    CHECK(s.entry(1) == base_triangle());
    CHECK(s.entry(2) == tri(ipt(0, 0), ipt(1, 0), pt(1, 1, -1, 1)));
    CHECK(s.entry(3) == tri(ipt(0, 0), ipt(0, -1), pt(1, 1, -1, 1)));
    CHECK(s.entry(4) == tri(ipt(0, 0), ipt(0, -1), pt(-1, 1, -1, 1)));
    CHECK(s.entry(5) == tri(ipt(0, 0), ipt(-1, 0), pt(-1, 1, -1, 1)));
    CHECK(s.entry(6) == tri(ipt(0, 0), ipt(-1, 0), pt(-1, 1, 1, 1)));
    CHECK(s.entry(7) == tri(ipt(0, 0), ipt(0, 1), pt(-1, 1, 1, 1)));
    CHECK(s.entry(8) == tri(ipt(0, 0), ipt(0, 1), h));
    CHECK(s.entry(9) == tri(ipt(0, 1), ipt(1, 1), h));
    CHECK(s.entry(10) == tri(ipt(1, 0), ipt(1, 1), h));
    CHECK(s.entry(11) == tri(ipt(1, 0), ipt(1, 1), pt(3, 1, 1, 1)));
    CHECK(s.entry(12) == tri(ipt(1, 0), ipt(2, 0), pt(3, 1, 1, 1)));
    CHECK(s.entry(13) == tri(ipt(1, 0), ipt(2, 0), pt(3, 1, -1, 1)));
    CHECK(s.entry(14) == tri(ipt(1, 0), ipt(1, -1), pt(3, 1, -1, 1)));
    CHECK(s.entry(15) == tri(ipt(1, 0), ipt(1, -1), pt(1, 1, -1, 1)));
}

TEST_CASE("star invariants on random triangles") {
    std::mt19937 rng(19);
    for (int i = 0; i < 40; ++i) {
        const LatticeTriangle t = random_triangle(rng, i % 16);
        const Star s = star(t);

        CHECK(s.entry(1) == t);

        std::unordered_set<LatticeTriangle, TriangleHash> seen;
        for (int j = 1; j <= kStarSize; ++j) {
            const LatticeTriangle& e = s.entry(j);
            CHECK(e.level == t.level);
            CHECK(shares_vertex(e, t));  // each entry meets t
            seen.insert(e);
        }
        CHECK(seen.size() == kStarSize);  // pairwise distinct

        // entries 2..8 around the left vertex, 11..15 around the right
        for (int j = 2; j <= 8; ++j) CHECK(s.entry(j).has_vertex(t.left));
        for (int j = 11; j <= 15; ++j) CHECK(s.entry(j).has_vertex(t.right));
        CHECK(s.entry(9).has_vertex(t.top));
        CHECK(s.entry(10).has_vertex(t.top));

        // pinned edge conditions
        CHECK(same_segment(s.entry(8).top, s.entry(8).right, t.left, t.top));
        CHECK(same_segment(s.entry(9).top, s.entry(9).right, s.entry(8).left, s.entry(8).top));
        CHECK(same_segment(s.entry(10).left, s.entry(10).top, t.top, t.right));

        // incidence tallies: 8 at each hypotenuse corner, 4 at the apex
        int at_left = 0, at_right = 0, at_top = 0, edge_sharing = 0;
        for (int j = 1; j <= kStarSize; ++j) {
            const LatticeTriangle& e = s.entry(j);
            int shared = 0;
            if (e.has_vertex(t.left)) ++at_left, ++shared;
            if (e.has_vertex(t.right)) ++at_right, ++shared;
            if (e.has_vertex(t.top)) ++at_top, ++shared;
            if (j > 1 && shared == 2) ++edge_sharing;
        }
        CHECK(at_left == 8);
        CHECK(at_right == 8);
        CHECK(at_top == 4);
        CHECK(edge_sharing == 3);
    }
}

TEST_CASE("star membership index") {
    const LatticeTriangle t0 = base_triangle();
    CHECK(star_membership_index(t0, t0) == 1);

    const LatticeTriangle eight =
        LatticeTriangle::from_vertices(0, ipt(0, 0), ipt(0, 1), pt(1, 1, 1, 1));
    CHECK(star_membership_index(t0, eight) == 8);
    CHECK(star_membership_index(eight, t0) == 10);

    CHECK_FALSE(star_membership_index(t0, translated(t0, 5, 5)).has_value());
    CHECK_THROWS_AS(star_membership_index(t0, subdivide(t0).first), std::invalid_argument);
}

TEST_CASE("stars nest under subdivision") {
    std::mt19937 rng(23);
    for (int i = 0; i < 25; ++i) {
        const LatticeTriangle t = random_triangle(rng, i % 10);
        // the carrier of star(t) is exactly the set of subdivision
        // children of its 15 entries
        std::unordered_set<LatticeTriangle, TriangleHash> pieces;
        for (const LatticeTriangle& e : star(t).slots) {
            const auto [a, b] = subdivide(e);
            pieces.insert(a);
            pieces.insert(b);
        }
        const auto [first, second] = subdivide(t);
        for (const LatticeTriangle& child : {first, second})
            for (const LatticeTriangle& e : star(child).slots)
                CHECK(pieces.count(e) == 1);
    }
}

TEST_CASE("child constructions are injective at a fixed level") {
    std::mt19937 rng(29);
    for (int i = 0; i < 30; ++i) {
        const LatticeTriangle a = random_triangle(rng, 6);
        const LatticeTriangle b = random_triangle(rng, 6);
        if (a == b) continue;
        CHECK(subdivide(a) != subdivide(b));
        CHECK(exterior_children(a) != exterior_children(b));
    }
}

TEST_CASE("triangle invariants hold through 20 nested applications") {
    std::mt19937 rng(31);
    for (int run = 0; run < 8; ++run) {
        LatticeTriangle t = base_triangle();
        for (int k = 0; k < 20; ++k) {
            switch (rng() % 3) {
                case 0: t = subdivide(t).first; break;
                case 1: t = subdivide(t).second; break;
                default: t = exterior_children(t).second; break;
            }
            const int level = t.level;
            CHECK(level == k + 1);
            // leg and hypotenuse lengths, exactly
            CHECK(squared_distance(t.left, t.top) == Dyadic(1, level + 1));
            CHECK(squared_distance(t.right, t.top) == Dyadic(1, level + 1));
            CHECK(squared_distance(t.left, t.right) == Dyadic(1, level));
            // clockwise orientation with the exact area
            CHECK(t.signed_area_doubled() == -Dyadic(1, level + 1));
            // lattice denominators
            const int max_exp = (level + 1) / 2 + 1;
            for (const DyadicPoint& p : {t.left, t.top, t.right}) {
                CHECK(p.x.exp() <= max_exp);
                CHECK(p.y.exp() <= max_exp);
            }
        }
    }
}
