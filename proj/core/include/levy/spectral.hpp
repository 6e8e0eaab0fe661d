#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "levy/typecensus.hpp"
#include "levy/typedyn.hpp"

namespace levy {

/// Row/column order of the transition matrix: transient codes first, then
/// core codes, then absorbing codes, ascending within each group. The
/// within-core order is a convention; any permutation of it is similar.
struct CanonicalOrder {
    std::vector<TypeCode> codes;
    std::size_t transient_count = 0;
    std::size_t core_count = 0;
    std::size_t absorbing_count = 0;
};

CanonicalOrder canonical_order(const TypeClassification& cls);

/// Sparse nonnegative integer matrix; rows hold (col, value) entries with
/// value > 0, sorted by column.
struct IntMatrix {
    struct Entry {
        std::uint32_t col = 0;
        std::uint32_t value = 0;
    };

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> data;

    static IntMatrix zero(std::size_t r, std::size_t c) {
        IntMatrix m;
        m.rows = r;
        m.cols = c;
        m.data.resize(r);
        return m;
    }

    std::uint32_t at(std::size_t i, std::size_t j) const {
        for (const Entry& e : data[i])
            if (e.col == j) return e.value;
        return 0;
    }

    void add(std::size_t i, std::size_t j, std::uint32_t v);

    std::uint64_t row_sum(std::size_t i) const {
        std::uint64_t s = 0;
        for (const Entry& e : data[i]) s += e.value;
        return s;
    }

    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& row : data) n += row.size();
        return n;
    }
};

/// The transition matrix over an ordered stable set: entry (i,j) counts
/// the subdivision children of type order[i] that have type order[j], so
/// every row sums to exactly 2.
struct TransitionMatrix {
    CanonicalOrder order;
    IntMatrix matrix;
};

/// Builds the matrix from the child-type map. Throws structure_error if a
/// child falls outside the given set (the set is not closed).
TransitionMatrix build_matrix(const CanonicalOrder& order);

/// Blocks of the canonical layout
///     ( P  Q  R )
///     ( 0  C  L )
///     ( 0  0  A )
/// with P transient x transient, C core x core, and A the absorbing
/// block, which is 2 x identity-pattern (each diagonal entry is 2).
/// Throws structure_error if any forbidden block has a nonzero entry or
/// the absorbing block is not diagonal.
struct BlockPartition {
    IntMatrix P;  // transient -> transient (a permutation matrix)
    IntMatrix Q;  // transient -> core
    IntMatrix R;  // transient -> absorbing
    IntMatrix C;  // core -> core (primitive)
    IntMatrix L;  // core -> absorbing
    std::array<std::uint32_t, 2> absorbing_diagonal{};  // expected {2, 2}
};

BlockPartition block_partition(const TransitionMatrix& m);

/// True iff every row and every column has exactly one nonzero entry,
/// equal to 1.
bool check_permutation(const IntMatrix& m);

/// Smallest m <= max_power with every entry of C^m strictly positive,
/// found by boolean reachability powers. Throws convergence_error when no
/// such power exists within the budget.
int primitivity_exponent(const IntMatrix& c, int max_power);

struct PowerMethodResult {
    double lambda = 0.0;
    int iterations = 0;
};

/// Dominant-eigenvalue estimate: v <- vC from the all-ones vector with
/// sup-norm renormalization; the Rayleigh quotient is the estimate and
/// iteration stops once successive estimates agree within tolerance and
/// the renormalized vector has settled (or the residual vanishes). Throws
/// convergence_error after max_iterations.
PowerMethodResult power_method(const IntMatrix& c, double tolerance = 1e-10,
                               int max_iterations = 100000);

/// A decimal d = scaled / 10^digits certified against an exact integer
/// power inequality; no floating point participates in the certificate.
struct CertifiedBound {
    BigInt scaled;
    int digits = 0;

    std::string decimal() const;
    double approx() const;
};

struct RowSumBounds {
    int power = 0;
    BigInt min_row_sum;  // u_k over C^k
    BigInt max_row_sum;  // U_k over C^k
    CertifiedBound lower;  // largest d with d^k <= u_k
    CertifiedBound upper;  // smallest d with U_k <= d^k
};

/// Exact integer check that the bound exceeds sqrt(2).
bool certified_exceeds_sqrt2(const CertifiedBound& bound);

/// Exact row sums of C^power (computed as C^power applied to the ones
/// vector in integer arithmetic) and certified decimal root bounds for
/// the spectral radius. digits controls the certificate granularity.
RowSumBounds rigorous_bounds(const IntMatrix& c, int power, int digits = 6);

/// Row sums of C^power as exact integers, in row order.
std::vector<BigInt> power_row_sums(const IntMatrix& c, int power);

/// Solves alpha * contraction^s = 1: s = -ln(alpha)/ln(contraction).
double dimension_from_growth(double alpha, double contraction);

/// Boundary counts |B_0..B_k| under symbolic evolution with successive
/// ratios; the ratios approach the dominant eigenvalue.
struct GrowthSeries {
    std::vector<BigInt> counts;
    std::vector<double> ratios;  // ratios[k] = counts[k+1]/counts[k]
};

GrowthSeries boundary_growth_series(const TypeCensus& start, int k_max);

/// End-to-end spectral summary driving the dimension computation.
struct SpectralReport {
    int stable_depth = 0;
    std::size_t stable_size = 0;
    std::size_t transient_size = 0;
    std::size_t core_size = 0;
    std::size_t absorbing_size = 0;
    int primitivity = 0;
    double lambda_estimate = 0.0;
    int iterations_used = 0;
    RowSumBounds bounds;
    double dimension_estimate = 0.0;
    double dimension_lower = 0.0;  // from the certified lambda bounds
    double dimension_upper = 0.0;
    int growth_depth = 0;
    double growth_ratio = 0.0;  // last boundary-count ratio
    std::array<std::uint32_t, 2> absorbing_diagonal{};
};

SpectralReport compute_spectral_report(double tolerance = 1e-10, int bound_power = 30,
                                       int max_power = 25, int max_iterations = 100000,
                                       int growth_depth = 200);

}  // namespace levy
