#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levy/dragon.hpp"
#include "levy/typecensus.hpp"

namespace levy {

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // human-readable counts / values
};

/// First census entry where the geometric and symbolic engines disagree.
struct CensusDivergence {
    int depth = 0;
    TypeCode code = 0;
    BigInt geometric;
    BigInt symbolic;
};

struct VerificationReport {
    int depth_max = 0;
    std::vector<VerificationCheck> checks;
    std::optional<CensusDivergence> first_divergence;
    std::optional<int> first_covered_depth;  // empty if none within depth_max
    CoveredCounts covered_at_first;          // both readings, see dragon.hpp
    bool all_passed = false;
};

/// Cross-checks the geometric and symbolic engines:
///  - census equality for every k <= depth_max,
///  - boundary-count agreement for every k <= depth_max,
///  - map-composition vs replacement agreement for k <= min(depth_max, 12),
///  - first appearance of the covered type, with both covered counts,
///  - transition-matrix row sums and block structure.
/// Throws resource_limit_error when depth_max exceeds depth_limit.
VerificationReport run_verification(int depth_max, int threads = 1,
                                    int depth_limit = kDefaultGeometricDepthLimit);

}  // namespace levy
