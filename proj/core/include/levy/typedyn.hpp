#pragma once

#include <utility>
#include <vector>

#include "levy/typecensus.hpp"

namespace levy {

/// Types of the two subdivision children of a triangle of type c. Each
/// child bit is gathered from a fixed parent bit; indices repeat, so this
/// is a gather, not a permutation:
///   child 1: (x8, x1, x9, x8, x10, x9, x1, x10, x15, x3, x2, x5, x4, x7, x6)
///   child 2: (x10, x1, x12, x11, x14, x13, x2, x15, x3, x8, x1, x9, x8, x10, x9)
std::pair<TypeCode, TypeCode> child_types(TypeCode c);

/// Census of the 15 star triangles of the base triangle at depth 0: each
/// of the codes 2^0..2^14 occurs exactly once.
TypeCensus star_seed_census();

struct StableSet {
    std::vector<TypeCode> codes;  // ascending
    int depth = 0;                // first k with S_k == S_{k+1}
};

/// Iterates the set map S -> union of child types over S from the seed
/// set {2^i : 0 <= i <= 14} until it stops changing. Throws
/// convergence_error if no fixed point appears within max_iterations.
StableSet stable_set(int max_iterations = 10000);

/// Partition of the stable set by long-run behavior.
struct TypeClassification {
    std::vector<TypeCode> absorbing;  // both children equal self
    std::vector<TypeCode> transient;  // on a pure permutation cycle
    std::vector<TypeCode> core;       // the rest: one strongly connected block
};

/// Structural classification of a child-closed code set:
///  - absorbing: codes whose two children both equal the code itself;
///  - transient: codes whose strongly connected component (absorbing
///    codes removed) carries exactly one child edge per node, i.e. the
///    component is a simple cycle and its block is a permutation matrix;
///  - core: everything else, which must form a single strongly connected
///    component.
/// Throws structure_error when the shape is not absorbing {0, 32767} plus
/// cycles plus one core component.
TypeClassification classify(const std::vector<TypeCode>& stable);

/// Applies child_types to every (code, count) pair n times, summing
/// counts into child codes. Total mass exactly doubles per step.
TypeCensus evolve(TypeCensus census, int steps);

/// Sum of counts over odd codes other than the all-ones code: the number
/// of occupied, not covered triangles.
BigInt boundary_count(const TypeCensus& census);

}  // namespace levy
