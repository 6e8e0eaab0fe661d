#include "levy/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "levy/errors.hpp"

namespace levy {

void IntMatrix::add(std::size_t i, std::size_t j, std::uint32_t v) {
    assert(i < rows && j < cols && v > 0);
    auto& row = data[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const Entry& e, std::size_t col) { return e.col < col; });
    if (it != row.end() && it->col == j)
        it->value += v;
    else
        row.insert(it, Entry{static_cast<std::uint32_t>(j), v});
}

CanonicalOrder canonical_order(const TypeClassification& cls) {
    CanonicalOrder order;
    order.transient_count = cls.transient.size();
    order.core_count = cls.core.size();
    order.absorbing_count = cls.absorbing.size();
    order.codes.reserve(order.transient_count + order.core_count + order.absorbing_count);
    order.codes.insert(order.codes.end(), cls.transient.begin(), cls.transient.end());
    order.codes.insert(order.codes.end(), cls.core.begin(), cls.core.end());
    order.codes.insert(order.codes.end(), cls.absorbing.begin(), cls.absorbing.end());
    return order;
}

TransitionMatrix build_matrix(const CanonicalOrder& order) {
    const std::size_t n = order.codes.size();
    std::vector<int> position(kTypeSpace, -1);
    for (std::size_t i = 0; i < n; ++i) position[order.codes[i]] = static_cast<int>(i);

    TransitionMatrix m;
    m.order = order;
    m.matrix = IntMatrix::zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = child_types(order.codes[i]);
        const int ja = position[a];
        const int jb = position[b];
        if (ja < 0 || jb < 0)
            throw structure_error("build_matrix: child type " +
                                  std::to_string(ja < 0 ? a : b) +
                                  " is outside the given set");
        m.matrix.add(i, static_cast<std::size_t>(ja), 1);
        m.matrix.add(i, static_cast<std::size_t>(jb), 1);
    }
    return m;
}

namespace {

IntMatrix extract_block(const IntMatrix& m, std::size_t row_begin, std::size_t row_end,
                        std::size_t col_begin, std::size_t col_end) {
    IntMatrix out = IntMatrix::zero(row_end - row_begin, col_end - col_begin);
    for (std::size_t i = row_begin; i < row_end; ++i)
        for (const auto& e : m.data[i])
            if (e.col >= col_begin && e.col < col_end)
                out.data[i - row_begin].push_back(
                    IntMatrix::Entry{static_cast<std::uint32_t>(e.col - col_begin), e.value});
    return out;
}

}  // namespace

BlockPartition block_partition(const TransitionMatrix& m) {
    const std::size_t t = m.order.transient_count;
    const std::size_t e = m.order.core_count;
    const std::size_t a = m.order.absorbing_count;
    if (t + e + a != m.order.codes.size() || m.matrix.rows != m.order.codes.size())
        throw structure_error("block_partition: inconsistent order bookkeeping");
    if (a != 2) throw structure_error("block_partition: expected 2 absorbing codes");

    BlockPartition blocks;
    // Core rows must not reach transient columns, and absorbing rows must
    // be purely diagonal; both would break the block-triangular layout.
    for (std::size_t i = t; i < t + e; ++i)
        for (const auto& entry : m.matrix.data[i])
            if (entry.col < t)
                throw structure_error("block_partition: core row " + std::to_string(i) +
                                      " has a transient child");
    for (std::size_t i = t + e; i < t + e + a; ++i) {
        for (const auto& entry : m.matrix.data[i])
            if (entry.col != i)
                throw structure_error("block_partition: absorbing row " + std::to_string(i) +
                                      " has an off-diagonal entry");
        blocks.absorbing_diagonal[i - t - e] = m.matrix.at(i, i);
    }

    blocks.P = extract_block(m.matrix, 0, t, 0, t);
    blocks.Q = extract_block(m.matrix, 0, t, t, t + e);
    blocks.R = extract_block(m.matrix, 0, t, t + e, t + e + a);
    blocks.C = extract_block(m.matrix, t, t + e, t, t + e);
    blocks.L = extract_block(m.matrix, t, t + e, t + e, t + e + a);
    return blocks;
}

bool check_permutation(const IntMatrix& m) {
    if (m.rows != m.cols) return false;
    std::vector<int> column_hits(m.cols, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (m.data[i].size() != 1 || m.data[i][0].value != 1) return false;
        ++column_hits[m.data[i][0].col];
    }
    return std::all_of(column_hits.begin(), column_hits.end(), [](int c) { return c == 1; });
}

namespace {

using BoolMatrix = std::vector<std::uint64_t>;  // row-major bit rows

BoolMatrix adjacency(const IntMatrix& m, std::size_t words) {
    BoolMatrix bits(m.rows * words, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (const auto& e : m.data[i])
            bits[i * words + e.col / 64] |= 1ull << (e.col % 64);
    return bits;
}

bool all_ones(const BoolMatrix& bits, std::size_t n, std::size_t words) {
    const std::uint64_t tail =
        n % 64 == 0 ? ~0ull : ((1ull << (n % 64)) - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t w = 0; w < words; ++w) {
            const std::uint64_t want = (w + 1 == words) ? tail : ~0ull;
            if ((bits[i * words + w] & want) != want) return false;
        }
    return true;
}

BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b, std::size_t n,
                         std::size_t words) {
    BoolMatrix out(n * words, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bitsw = a[i * words + w];
            while (bitsw != 0) {
                const std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bitsw));
                bitsw &= bitsw - 1;
                for (std::size_t k = 0; k < words; ++k)
                    out[i * words + k] |= b[j * words + k];
            }
        }
    }
    return out;
}

}  // namespace

int primitivity_exponent(const IntMatrix& c, int max_power) {
    if (c.rows != c.cols || c.rows == 0)
        throw std::invalid_argument("primitivity_exponent: matrix must be square and nonempty");
    if (max_power < 1) throw std::invalid_argument("primitivity_exponent: max_power < 1");
    const std::size_t n = c.rows;
    const std::size_t words = (n + 63) / 64;
    const BoolMatrix adj = adjacency(c, words);
    BoolMatrix power = adj;
    for (int m = 1; m <= max_power; ++m) {
        if (all_ones(power, n, words)) return m;
        power = bool_multiply(power, adj, n, words);
    }
    throw convergence_error("primitivity_exponent: no strictly positive power up to " +
                            std::to_string(max_power));
}

PowerMethodResult power_method(const IntMatrix& c, double tolerance, int max_iterations) {
    if (c.rows != c.cols || c.rows == 0)
        throw std::invalid_argument("power_method: matrix must be square and nonempty");
    if (!(tolerance > 0)) throw std::invalid_argument("power_method: tolerance must be > 0");

    const std::size_t n = c.rows;
    std::vector<double> v(n, 1.0);
    std::vector<double> w(n);
    double previous = std::numeric_limits<double>::quiet_NaN();

    for (int iteration = 1; iteration <= max_iterations; ++iteration) {
        std::fill(w.begin(), w.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double vi = v[i];
            if (vi == 0.0) continue;
            for (const auto& e : c.data[i]) w[e.col] += vi * e.value;
        }

        double numerator = 0.0;
        double denominator = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            numerator += w[j] * v[j];
            denominator += v[j] * v[j];
        }
        const double estimate = numerator / denominator;

        double sup = 0.0;
        for (double x : w) sup = std::max(sup, std::abs(x));
        if (sup == 0.0) return {0.0, iteration};  // reached the zero vector

        double residual = 0.0;
        double vector_delta = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            residual = std::max(residual, std::abs(w[j] - estimate * v[j]));
            w[j] /= sup;
            vector_delta = std::max(vector_delta, std::abs(w[j] - v[j]));
        }
        v.swap(w);

        const double scale = std::max(1.0, std::abs(estimate));
        const bool rayleigh_settled =
            !std::isnan(previous) && std::abs(estimate - previous) < tolerance;
        const bool vector_settled = vector_delta < std::sqrt(tolerance);
        if (residual <= tolerance * scale || (rayleigh_settled && vector_settled))
            return {estimate, iteration};
        previous = estimate;
    }
    throw convergence_error("power_method: no convergence within " +
                            std::to_string(max_iterations) + " iterations");
}

std::string CertifiedBound::decimal() const {
    BigInt v = scaled;
    const bool negative = v < 0;
    if (negative) v = -v;
    std::string s = v.str();
    const std::size_t places = static_cast<std::size_t>(digits);
    if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
    std::string out = negative ? "-" : "";
    out += s.substr(0, s.size() - places);
    if (places > 0) {
        out += '.';
        out += s.substr(s.size() - places);
    }
    return out;
}

double CertifiedBound::approx() const {
    return scaled.convert_to<double>() / std::pow(10.0, digits);
}

std::vector<BigInt> power_row_sums(const IntMatrix& c, int power) {
    if (c.rows != c.cols) throw std::invalid_argument("power_row_sums: matrix must be square");
    if (power < 1) throw std::invalid_argument("power_row_sums: power must be >= 1");
    // Row sums of C^k are C^k applied to the ones vector, so k sparse
    // exact matrix-vector products suffice.
    std::vector<BigInt> r(c.rows, BigInt(1));
    std::vector<BigInt> next(c.rows);
    for (int step = 0; step < power; ++step) {
        for (std::size_t i = 0; i < c.rows; ++i) {
            BigInt sum = 0;
            for (const auto& e : c.data[i]) sum += BigInt(e.value) * r[e.col];
            next[i] = std::move(sum);
        }
        r.swap(next);
    }
    return r;
}

namespace {

BigInt ipow(const BigInt& base, int e) {
    BigInt result = 1;
    BigInt b = base;
    int n = e;
    while (n > 0) {
        if (n & 1) result *= b;
        b *= b;
        n >>= 1;
    }
    return result;
}

/// Largest n >= 0 with n^k <= x (x >= 0).
BigInt floor_kth_root(const BigInt& x, int k) {
    if (x <= 0) return 0;
    BigInt lo = 0;
    BigInt hi = 1;
    while (ipow(hi, k) <= x) hi <<= 1;
    while (lo + 1 < hi) {
        const BigInt mid = (lo + hi) >> 1;
        if (ipow(mid, k) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

RowSumBounds rigorous_bounds(const IntMatrix& c, int power, int digits) {
    if (power < 1) throw std::invalid_argument("rigorous_bounds: power must be >= 1");
    if (digits < 1) throw std::invalid_argument("rigorous_bounds: digits must be >= 1");

    const std::vector<BigInt> sums = power_row_sums(c, power);
    RowSumBounds bounds;
    bounds.power = power;
    bounds.min_row_sum = sums[0];
    bounds.max_row_sum = sums[0];
    for (const BigInt& s : sums) {
        if (s < bounds.min_row_sum) bounds.min_row_sum = s;
        if (s > bounds.max_row_sum) bounds.max_row_sum = s;
    }

    // Certified decimal roots: d = scaled/10^digits is a valid lower bound
    // iff scaled^k <= u_k * 10^(k*digits), an integer comparison.
    const BigInt scale = ipow(BigInt(10), digits);
    const BigInt lower_target = bounds.min_row_sum * ipow(scale, power);
    const BigInt upper_target = bounds.max_row_sum * ipow(scale, power);

    bounds.lower.digits = digits;
    bounds.lower.scaled = floor_kth_root(lower_target, power);
    assert(ipow(bounds.lower.scaled, power) <= lower_target);

    bounds.upper.digits = digits;
    BigInt up = floor_kth_root(upper_target, power);
    if (ipow(up, power) < upper_target) up += 1;
    bounds.upper.scaled = up;
    assert(ipow(bounds.upper.scaled, power) >= upper_target);

    return bounds;
}

bool certified_exceeds_sqrt2(const CertifiedBound& bound) {
    // d = scaled/10^digits exceeds sqrt(2) iff scaled^2 > 2 * 10^(2*digits).
    return bound.scaled * bound.scaled > 2 * ipow(BigInt(10), 2 * bound.digits);
}

double dimension_from_growth(double alpha, double contraction) {
    if (!(alpha >= 1.0))
        throw std::invalid_argument("dimension_from_growth: alpha must be >= 1");
    if (!(contraction > 0.0 && contraction < 1.0))
        throw std::invalid_argument("dimension_from_growth: contraction must be in (0,1)");
    return -std::log(alpha) / std::log(contraction);
}

GrowthSeries boundary_growth_series(const TypeCensus& start, int k_max) {
    if (k_max < 0) throw std::invalid_argument("boundary_growth_series: k_max < 0");
    GrowthSeries series;
    series.counts.reserve(static_cast<std::size_t>(k_max) + 1);
    TypeCensus census = start;
    series.counts.push_back(boundary_count(census));
    static const BigInt kRatioScale = ipow(BigInt(10), 18);
    for (int k = 0; k < k_max; ++k) {
        census = evolve(std::move(census), 1);
        series.counts.push_back(boundary_count(census));
        const BigInt& prev = series.counts[static_cast<std::size_t>(k)];
        const BigInt& next = series.counts[static_cast<std::size_t>(k) + 1];
        if (prev == 0) {
            series.ratios.push_back(0.0);
        } else {
            const BigInt scaled = next * kRatioScale / prev;
            series.ratios.push_back(scaled.convert_to<double>() / 1e18);
        }
    }
    return series;
}

SpectralReport compute_spectral_report(double tolerance, int bound_power, int max_power,
                                       int max_iterations, int growth_depth) {
    SpectralReport report;

    const StableSet stable = stable_set();
    report.stable_depth = stable.depth;
    report.stable_size = stable.codes.size();

    const TypeClassification cls = classify(stable.codes);
    report.transient_size = cls.transient.size();
    report.core_size = cls.core.size();
    report.absorbing_size = cls.absorbing.size();

    const TransitionMatrix m = build_matrix(canonical_order(cls));
    const BlockPartition blocks = block_partition(m);
    report.absorbing_diagonal = blocks.absorbing_diagonal;
    if (!check_permutation(blocks.P))
        throw structure_error("spectral: transient block is not a permutation matrix");

    report.primitivity = primitivity_exponent(blocks.C, max_power);

    const PowerMethodResult pm = power_method(blocks.C, tolerance, max_iterations);
    report.lambda_estimate = pm.lambda;
    report.iterations_used = pm.iterations;

    report.bounds = rigorous_bounds(blocks.C, bound_power);

    const double contraction = std::sqrt(0.5);
    report.dimension_estimate = dimension_from_growth(pm.lambda, contraction);
    report.dimension_lower = dimension_from_growth(report.bounds.lower.approx(), contraction);
    report.dimension_upper = dimension_from_growth(report.bounds.upper.approx(), contraction);

    report.growth_depth = growth_depth;
    if (growth_depth > 0) {
        const GrowthSeries growth = boundary_growth_series(star_seed_census(), growth_depth);
        report.growth_ratio = growth.ratios.back();
    }
    return report;
}

}  // namespace levy
