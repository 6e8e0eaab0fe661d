#pragma once

#include <cstdint>
#include <unordered_map>

#include "levy/lattice.hpp"
#include "levy/typecensus.hpp"

namespace levy {

/// Geometric iteration deeper than this is refused by default (the census
/// at depth 20 already enumerates ~15.7M triangles). The symbolic engine
/// has no such limit.
inline constexpr int kDefaultGeometricDepthLimit = 20;

/// The distinct triangles of the k-th iterate of the base triangle under
/// the exterior-replacement dynamics, with the number of index sequences
/// mapping to each triangle. sequence_count == 2^k == sum of multiplicities.
struct OccupancySet {
    int level = 0;
    std::unordered_map<LatticeTriangle, std::uint64_t, TriangleHash> multiplicity;
    std::uint64_t sequence_count = 0;

    bool contains(const LatticeTriangle& t) const { return multiplicity.count(t) != 0; }
    std::size_t distinct_count() const { return multiplicity.size(); }
};

/// The two similitudes generating the dragon:
///   map 1: (x,y) -> ((x-y)/2, (x+y)/2)
///   map 2: (x,y) -> ((x+y+1)/2, (y-x+1)/2)
/// Exact; throws std::invalid_argument unless which is 1 or 2.
DyadicPoint ifs_map(int which, const DyadicPoint& p);

/// Image of a triangle under map 1 or 2. Both maps preserve orientation,
/// so vertex roles carry over pointwise.
LatticeTriangle ifs_map(int which, const LatticeTriangle& t);

/// Occupancy after k replacement steps from the base triangle.
OccupancySet iterate(int depth, int depth_limit = kDefaultGeometricDepthLimit);

/// 15-bit occupancy code of t's star against occ. Levels must match.
TypeCode neighborhood_type(const LatticeTriangle& t, const OccupancySet& occ);

/// Tallies neighborhood types over all 15*2^k triangles of the level-k
/// subdivision of the base triangle's star. Deterministic for any thread
/// count.
TypeCensus type_census(int depth, int threads = 1,
                       int depth_limit = kDefaultGeometricDepthLimit);

/// Number of distinct occupied, not covered triangles at depth k.
std::uint64_t boundary_count_geometric(int depth,
                                       int depth_limit = kDefaultGeometricDepthLimit);

struct CoveredCounts {
    std::uint64_t distinct = 0;   // covered triangles
    std::uint64_t sequences = 0;  // index sequences landing on covered triangles
};

/// Both readings of "how many covered" for a given occupancy.
CoveredCounts covered_counts(const OccupancySet& occ);

}  // namespace levy
