#include <doctest.h>

#include <unordered_map>

#include "levy/dragon.hpp"
#include "levy/errors.hpp"
#include "levy/typedyn.hpp"
#include "test_support.hpp"

using namespace levy;
using namespace levy::test;

TEST_CASE("ifs maps: fixed points and one image") {
    CHECK(ifs_map(1, ipt(0, 0)) == ipt(0, 0));
    CHECK(ifs_map(2, ipt(1, 0)) == ipt(1, 0));
    CHECK(ifs_map(1, ipt(1, 0)) == pt(1, 1, 1, 1));
    CHECK_THROWS_AS(ifs_map(3, ipt(0, 0)), std::invalid_argument);
}

TEST_CASE("iterate: first levels") {
    const OccupancySet zero = iterate(0);
    CHECK(zero.level == 0);
    CHECK(zero.sequence_count == 1);
    CHECK(zero.distinct_count() == 1);
    CHECK(zero.contains(base_triangle()));

    const OccupancySet one = iterate(1);
    CHECK(one.sequence_count == 2);
    CHECK(one.distinct_count() == 2);
    CHECK(one.contains(
        LatticeTriangle::from_vertices(1, ipt(0, 0), pt(0, 0, 1, 1), pt(1, 1, 1, 1))));
    CHECK(one.contains(
        LatticeTriangle::from_vertices(1, pt(1, 1, 1, 1), pt(1, 0, 1, 1), ipt(1, 0))));

    CHECK_THROWS_AS(iterate(kDefaultGeometricDepthLimit + 1), resource_limit_error);
    CHECK_THROWS_AS(iterate(-1), std::invalid_argument);
}

TEST_CASE("composed maps agree with replacement up to depth 10") {
    std::unordered_map<LatticeTriangle, std::uint64_t, TriangleHash> images;
    images.emplace(base_triangle(), 1);
    for (int k = 0; k <= 10; ++k) {
        CHECK(iterate(k).multiplicity == images);
        std::unordered_map<LatticeTriangle, std::uint64_t, TriangleHash> next;
        for (const auto& [t, count] : images) {
            next[ifs_map(1, t)] += count;
            next[ifs_map(2, t)] += count;
        }
        images = std::move(next);
    }
}

TEST_CASE("neighborhood types at depth 0") {
    const OccupancySet occ = iterate(0);
    CHECK(neighborhood_type(base_triangle(), occ) == 1);

    const LatticeTriangle eight =
        LatticeTriangle::from_vertices(0, ipt(0, 0), ipt(0, 1), pt(1, 1, 1, 1));
    CHECK(neighborhood_type(eight, occ) == 512);

    CHECK(neighborhood_type(translated(base_triangle(), 7, 0), occ) == 0);

    CHECK_THROWS_AS(neighborhood_type(subdivide(base_triangle()).first, occ),
                    std::invalid_argument);
}

TEST_CASE("census at depth 0 is one of each single-bit code") {
    const TypeCensus census = type_census(0);
    CHECK(census.counts.size() == 15);
    for (int i = 0; i < 15; ++i) CHECK(census.at(static_cast<TypeCode>(1u << i)) == 1);
}

TEST_CASE("census mass and occupied mass") {
    for (int k = 0; k <= 6; ++k) {
        const TypeCensus census = type_census(k);
        CHECK(census.total() == BigInt(15) << k);
        BigInt occupied = 0;
        for (const auto& [code, n] : census.counts)
            if (code & 1u) occupied += n;
        CHECK(occupied == BigInt(iterate(k).distinct_count()));
    }
}

TEST_CASE("census is independent of the thread count") {
    const TypeCensus reference = type_census(7, 1);
    CHECK(type_census(7, 3) == reference);
    CHECK(type_census(7, 16) == reference);
}

TEST_CASE("exterior children of the base star stay inside it") {
    std::unordered_set<LatticeTriangle, TriangleHash> level_one;
    for (const LatticeTriangle& e : star(base_triangle()).slots) {
        const auto [a, b] = subdivide(e);
        level_one.insert(a);
        level_one.insert(b);
    }
    for (const LatticeTriangle& e : star(base_triangle()).slots) {
        CHECK(level_one.count(ifs_map(1, e)) == 1);
        CHECK(level_one.count(ifs_map(2, e)) == 1);
    }
}

TEST_CASE("boundary counts at small depths") {
    CHECK(boundary_count_geometric(0) == 1);
    CHECK(boundary_count_geometric(1) == 2);
    for (int k = 0; k <= 6; ++k)
        CHECK(BigInt(boundary_count_geometric(k)) ==
              boundary_count(evolve(star_seed_census(), k)));
}

TEST_CASE("no covered triangle before depth 14, eight at depth 14") {
    CHECK(type_census(13).at(kCoveredType) == 0);

    const OccupancySet occ = iterate(14);
    CHECK(occ.sequence_count == 16384);
    const CoveredCounts covered = covered_counts(occ);
    CHECK(covered.distinct == 8);
    CHECK(covered.sequences == 8);
}

TEST_CASE("covered triangles stay covered one level down") {
    const OccupancySet occ14 = iterate(14);
    const OccupancySet occ15 = iterate(15);
    int checked = 0;
    for (const auto& [t, mult] : occ14.multiplicity) {
        if (neighborhood_type(t, occ14) != kCoveredType) continue;
        const auto [a, b] = subdivide(t);
        CHECK(neighborhood_type(a, occ15) == kCoveredType);
        CHECK(neighborhood_type(b, occ15) == kCoveredType);
        ++checked;
    }
    CHECK(checked == 8);
}
