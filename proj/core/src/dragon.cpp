#include "levy/dragon.hpp"

#include <array>
#include <stdexcept>
#include <thread>
#include <vector>

#include "levy/errors.hpp"

namespace levy {

DyadicPoint ifs_map(int which, const DyadicPoint& p) {
    if (which == 1) return {(p.x - p.y).half(), (p.x + p.y).half()};
    if (which == 2) {
        const Dyadic one = Dyadic::from_int(1);
        return {(p.x + p.y + one).half(), (p.y - p.x + one).half()};
    }
    throw std::invalid_argument("ifs_map: which must be 1 or 2");
}

LatticeTriangle ifs_map(int which, const LatticeTriangle& t) {
    // Both maps are direct similitudes, so roles transfer pointwise.
    return LatticeTriangle{t.level + 1, ifs_map(which, t.left), ifs_map(which, t.top),
                           ifs_map(which, t.right)};
}

namespace {

void check_depth(int depth, int depth_limit) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    if (depth > depth_limit)
        throw resource_limit_error("geometric depth " + std::to_string(depth) +
                                   " exceeds limit " + std::to_string(depth_limit));
}

}  // namespace

OccupancySet iterate(int depth, int depth_limit) {
    check_depth(depth, depth_limit);
    OccupancySet occ;
    occ.level = 0;
    occ.sequence_count = 1;
    occ.multiplicity.emplace(base_triangle(), 1);
    for (int k = 0; k < depth; ++k) {
        decltype(occ.multiplicity) next;
        next.reserve(occ.multiplicity.size() * 2);
        for (const auto& [t, count] : occ.multiplicity) {
            const auto [on_left, on_right] = exterior_children(t);
            next[on_left] += count;
            next[on_right] += count;
        }
        occ.multiplicity = std::move(next);
        occ.level = k + 1;
        occ.sequence_count <<= 1;
    }
    return occ;
}

TypeCode neighborhood_type(const LatticeTriangle& t, const OccupancySet& occ) {
    if (t.level != occ.level)
        throw std::invalid_argument("neighborhood_type: triangle level " +
                                    std::to_string(t.level) + " != occupancy level " +
                                    std::to_string(occ.level));
    const Star s = star(t);
    TypeCode code = 0;
    for (int i = 0; i < kStarSize; ++i)
        if (occ.contains(s.slots[static_cast<std::size_t>(i)]))
            code = static_cast<TypeCode>(code | (1u << i));
    return code;
}

namespace {

using Tally = std::vector<std::uint64_t>;  // indexed by type code

void tally_subtree(const LatticeTriangle& t, int remaining, const OccupancySet& occ,
                   Tally& tally) {
    if (remaining == 0) {
        ++tally[neighborhood_type(t, occ)];
        return;
    }
    const auto [first, second] = subdivide(t);
    tally_subtree(first, remaining - 1, occ, tally);
    tally_subtree(second, remaining - 1, occ, tally);
}

}  // namespace

TypeCensus type_census(int depth, int threads, int depth_limit) {
    check_depth(depth, depth_limit);
    if (threads < 1) threads = 1;
    const OccupancySet occ = iterate(depth, depth_limit);

    // Work units: the subtrees rooted at a shallow split of the 15 star
    // triangles. Integer tallies merge associatively, so the result does
    // not depend on how units land on threads.
    const int split = depth < 6 ? depth : 6;
    std::vector<LatticeTriangle> roots;
    {
        const Star n0 = star(base_triangle());
        std::vector<LatticeTriangle> frontier(n0.slots.begin(), n0.slots.end());
        for (int d = 0; d < split; ++d) {
            std::vector<LatticeTriangle> next;
            next.reserve(frontier.size() * 2);
            for (const auto& t : frontier) {
                const auto [first, second] = subdivide(t);
                next.push_back(first);
                next.push_back(second);
            }
            frontier = std::move(next);
        }
        roots = std::move(frontier);
    }
    const int remaining = depth - split;

    std::vector<Tally> tallies;
    if (threads == 1 || roots.size() < 2) {
        tallies.emplace_back(kTypeSpace, 0);
        for (const auto& r : roots) tally_subtree(r, remaining, occ, tallies[0]);
    } else {
        const std::size_t workers =
            std::min<std::size_t>(static_cast<std::size_t>(threads), roots.size());
        tallies.assign(workers, Tally(kTypeSpace, 0));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < roots.size(); i += workers)
                    tally_subtree(roots[i], remaining, occ, tallies[w]);
            });
        }
        for (auto& th : pool) th.join();
    }

    TypeCensus census;
    for (std::uint32_t code = 0; code < kTypeSpace; ++code) {
        std::uint64_t total = 0;
        for (const auto& t : tallies) total += t[code];
        if (total != 0) census.counts.emplace(static_cast<TypeCode>(code), BigInt(total));
    }
    return census;
}

std::uint64_t boundary_count_geometric(int depth, int depth_limit) {
    const OccupancySet occ = iterate(depth, depth_limit);
    std::uint64_t count = 0;
    for (const auto& [t, mult] : occ.multiplicity)
        if (is_boundary_type(neighborhood_type(t, occ))) ++count;
    return count;
}

CoveredCounts covered_counts(const OccupancySet& occ) {
    CoveredCounts counts;
    for (const auto& [t, mult] : occ.multiplicity) {
        if (neighborhood_type(t, occ) == kCoveredType) {
            ++counts.distinct;
            counts.sequences += mult;
        }
    }
    return counts;
}

}  // namespace levy
