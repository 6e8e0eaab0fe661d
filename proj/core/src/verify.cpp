#include "levy/verify.hpp"

#include <string>
#include <unordered_map>

#include "levy/errors.hpp"
#include "levy/spectral.hpp"
#include "levy/typedyn.hpp"

namespace levy {

namespace {

std::string big(const BigInt& n) { return n.str(); }

/// First (code, count) pair on which the two censuses disagree.
std::optional<CensusDivergence> first_divergence(int depth, const TypeCensus& geometric,
                                                 const TypeCensus& symbolic) {
    for (std::uint32_t code = 0; code < kTypeSpace; ++code) {
        const BigInt& g = geometric.at(static_cast<TypeCode>(code));
        const BigInt& s = symbolic.at(static_cast<TypeCode>(code));
        if (g != s)
            return CensusDivergence{depth, static_cast<TypeCode>(code), g, s};
    }
    return std::nullopt;
}

}  // namespace

VerificationReport run_verification(int depth_max, int threads, int depth_limit) {
    if (depth_max < 0) throw std::invalid_argument("run_verification: depth_max < 0");
    if (depth_max > depth_limit)
        throw resource_limit_error("verification depth " + std::to_string(depth_max) +
                                   " exceeds geometric limit " + std::to_string(depth_limit));

    VerificationReport report;
    report.depth_max = depth_max;

    // Geometric vs symbolic census, depth by depth, plus boundary-count
    // agreement through the two independent counting paths.
    {
        bool censuses_match = true;
        bool boundaries_match = true;
        BigInt triangles_compared = 0;
        TypeCensus symbolic = star_seed_census();
        for (int k = 0; k <= depth_max; ++k) {
            if (k > 0) symbolic = evolve(std::move(symbolic), 1);
            const TypeCensus geometric = type_census(k, threads, depth_limit);
            triangles_compared += geometric.total();
            if (geometric != symbolic) {
                censuses_match = false;
                if (!report.first_divergence)
                    report.first_divergence = first_divergence(k, geometric, symbolic);
            }
            if (BigInt(boundary_count_geometric(k, depth_limit)) != boundary_count(symbolic))
                boundaries_match = false;
        }
        report.checks.push_back({"census_match", censuses_match,
                                 "depths 0.." + std::to_string(depth_max) + ", " +
                                     big(triangles_compared) + " triangles compared"});
        report.checks.push_back({"boundary_count_match", boundaries_match,
                                 "geometric vs symbolic at every depth <= " +
                                     std::to_string(depth_max)});
    }

    // Covered-type first appearance, with both readings of the count.
    {
        TypeCensus symbolic = star_seed_census();
        for (int k = 0; k <= depth_max; ++k) {
            if (k > 0) symbolic = evolve(std::move(symbolic), 1);
            if (symbolic.at(kCoveredType) != 0) {
                report.first_covered_depth = k;
                break;
            }
        }
        bool ok = true;
        std::string detail;
        if (report.first_covered_depth) {
            const int k = *report.first_covered_depth;
            report.covered_at_first = covered_counts(iterate(k, depth_limit));
            const TypeCensus at_k = evolve(star_seed_census(), k);
            detail = "first at depth " + std::to_string(k) + ": symbolic=" +
                     big(at_k.at(kCoveredType)) +
                     ", geometric distinct=" + std::to_string(report.covered_at_first.distinct) +
                     ", geometric sequences=" + std::to_string(report.covered_at_first.sequences);
            ok = BigInt(report.covered_at_first.distinct) == at_k.at(kCoveredType);
            if (depth_max >= 14) ok = ok && k == 14;
        } else {
            detail = "no covered triangle up to depth " + std::to_string(depth_max);
            if (depth_max >= 14) ok = false;  // one must appear at 14
        }
        report.checks.push_back({"covered_first_appearance", ok, detail});
    }

    // Applying the maps in all 2^k compositions must reproduce the
    // replacement iteration exactly, multiplicities included.
    {
        const int map_depth = depth_max < 12 ? depth_max : 12;
        bool ok = true;
        std::unordered_map<LatticeTriangle, std::uint64_t, TriangleHash> images;
        images.emplace(base_triangle(), 1);
        for (int k = 0; k <= map_depth; ++k) {
            const OccupancySet occ = iterate(k, depth_limit);
            if (occ.multiplicity != images) ok = false;
            if (k == map_depth) break;
            std::unordered_map<LatticeTriangle, std::uint64_t, TriangleHash> next;
            next.reserve(images.size() * 2);
            for (const auto& [t, count] : images) {
                next[ifs_map(1, t)] += count;
                next[ifs_map(2, t)] += count;
            }
            images = std::move(next);
        }
        report.checks.push_back({"map_replacement_agreement", ok,
                                 "composition images vs replacement, depths 0.." +
                                     std::to_string(map_depth)});
    }

    // Transition-matrix shape: row sums and the block layout.
    {
        bool rows_ok = true;
        bool blocks_ok = true;
        std::string detail;
        try {
            const StableSet stable = stable_set();
            const TransitionMatrix m = build_matrix(canonical_order(classify(stable.codes)));
            for (std::size_t i = 0; i < m.matrix.rows; ++i)
                if (m.matrix.row_sum(i) != 2) rows_ok = false;
            const BlockPartition blocks = block_partition(m);
            blocks_ok = check_permutation(blocks.P) &&
                        blocks.absorbing_diagonal[0] == 2 && blocks.absorbing_diagonal[1] == 2;
            detail = std::to_string(m.matrix.rows) + "x" + std::to_string(m.matrix.cols) +
                     ", blocks " + std::to_string(blocks.P.rows) + "/" +
                     std::to_string(blocks.C.rows) + "/2";
        } catch (const structure_error& err) {
            blocks_ok = false;
            detail = err.what();
        }
        report.checks.push_back({"matrix_row_sums", rows_ok, "every row sums to 2"});
        report.checks.push_back({"matrix_block_structure", blocks_ok, detail});
    }

    report.all_passed = true;
    for (const auto& check : report.checks) report.all_passed = report.all_passed && check.passed;
    return report;
}

}  // namespace levy
