#include "levy/serialize.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace levy {

namespace {

using Json = nlohmann::ordered_json;

/// Doubles are emitted as fixed 12-significant-digit strings so reports
/// are byte-stable and diffable.
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

Json census_counts(const TypeCensus& census) {
    Json counts = Json::object();
    for (const auto& [code, n] : census.counts) counts[std::to_string(code)] = n.str();
    return counts;
}

const char* class_name(std::size_t index, std::size_t transient_end, std::size_t core_end) {
    if (index < transient_end) return "transient";
    if (index < core_end) return "core";
    return "absorbing";
}

}  // namespace

std::string census_to_json(const TypeCensus& census, int depth, const std::string& engine) {
    Json doc;
    doc["command"] = "census";
    doc["depth"] = depth;
    doc["engine"] = engine;
    doc["total"] = census.total().str();
    doc["distinct_types"] = census.counts.size();
    doc["counts"] = census_counts(census);
    doc["provenance"] = {
        {"counts", "triangles of the depth-k subdivision of the base star, keyed by the "
                   "15-bit neighborhood occupancy code"},
        {"total", "15 * 2^depth"},
    };
    return doc.dump(2) + "\n";
}

std::string stable_set_to_text(const TypeClassification& cls, int depth) {
    std::string out;
    (void)depth;
    for (TypeCode c : cls.transient) out += std::to_string(c) + " transient\n";
    for (TypeCode c : cls.core) out += std::to_string(c) + " core\n";
    for (TypeCode c : cls.absorbing) out += std::to_string(c) + " absorbing\n";
    return out;
}

std::string stable_set_to_json(const TypeClassification& cls, int depth) {
    Json doc;
    doc["command"] = "stable-set";
    doc["stabilization_depth"] = depth;
    doc["size"] = cls.transient.size() + cls.core.size() + cls.absorbing.size();
    doc["classes"] = {
        {"transient", cls.transient},
        {"core", cls.core},
        {"absorbing", cls.absorbing},
    };
    doc["provenance"] = {
        {"size", "number of neighborhood types that persist under the child-type map"},
        {"stabilization_depth", "first k with S_k == S_{k+1}"},
    };
    return doc.dump(2) + "\n";
}

std::string matrix_to_triplets(const IntMatrix& m) {
    std::string out = std::to_string(m.rows) + " " + std::to_string(m.cols) + " " +
                      std::to_string(m.nonzero_count()) + "\n";
    for (std::size_t i = 0; i < m.rows; ++i)
        for (const auto& e : m.data[i])
            out += std::to_string(i) + " " + std::to_string(e.col) + " " +
                   std::to_string(e.value) + "\n";
    return out;
}

std::string matrix_metadata_json(const TransitionMatrix& m) {
    const std::size_t t = m.order.transient_count;
    const std::size_t e = m.order.core_count;
    const std::size_t n = m.order.codes.size();
    Json doc;
    doc["command"] = "matrix";
    doc["dimension"] = n;
    doc["nonzeros"] = m.matrix.nonzero_count();
    doc["order"] = m.order.codes;
    doc["class_offsets"] = {
        {"transient", {0, t}},
        {"core", {t, t + e}},
        {"absorbing", {t + e, n}},
    };
    Json classes = Json::array();
    for (std::size_t i = 0; i < n; ++i) classes.push_back(class_name(i, t, t + e));
    doc["row_classes"] = classes;
    doc["provenance"] = {
        {"order", "type codes in block order: transient, core, absorbing; entry (i,j) counts "
                  "children of type order[i] having type order[j]"},
    };
    return doc.dump(2) + "\n";
}

std::string spectral_report_to_json(const SpectralReport& r) {
    Json doc;
    doc["command"] = "spectral";
    doc["stable_set"] = {
        {"stabilization_depth", r.stable_depth},
        {"size", r.stable_size},
        {"transient", r.transient_size},
        {"core", r.core_size},
        {"absorbing", r.absorbing_size},
    };
    doc["matrix"] = {
        {"dimension", r.stable_size},
        {"transient_block_is_permutation", true},
        {"absorbing_diagonal", r.absorbing_diagonal},
        {"absorbing_block_note",
         "each absorbing row has a single diagonal entry 2 (twice the identity pattern)"},
    };
    doc["primitivity_exponent"] = r.primitivity;
    doc["power_method"] = {
        {"lambda", fmt(r.lambda_estimate)},
        {"iterations_used", r.iterations_used},
    };
    doc["bounds"] = {
        {"power", r.bounds.power},
        {"min_row_sum", r.bounds.min_row_sum.str()},
        {"max_row_sum", r.bounds.max_row_sum.str()},
        {"certified_lower", r.bounds.lower.decimal()},
        {"certified_upper", r.bounds.upper.decimal()},
        {"lower_exceeds_sqrt2", certified_exceeds_sqrt2(r.bounds.lower)},
    };
    doc["dimension"] = {
        {"estimate", fmt(r.dimension_estimate)},
        {"from_certified_lower", fmt(r.dimension_lower)},
        {"from_certified_upper", fmt(r.dimension_upper)},
    };
    doc["growth"] = {
        {"depth", r.growth_depth},
        {"final_ratio", fmt(r.growth_ratio)},
    };
    doc["provenance"] = {
        {"power_method.lambda", "dominant eigenvalue of the core transition block"},
        {"bounds.min_row_sum", "exact minimum row sum of the power-th power of the core block"},
        {"bounds.max_row_sum", "exact maximum row sum of the power-th power of the core block"},
        {"bounds.certified_lower",
         "decimal d with d^power <= min_row_sum, checked in integer arithmetic"},
        {"bounds.certified_upper",
         "decimal d with max_row_sum <= d^power, checked in integer arithmetic"},
        {"dimension.estimate", "ln(lambda) / ln(sqrt(2))"},
        {"growth.final_ratio", "last successive ratio of boundary counts, approaching lambda"},
    };
    return doc.dump(2) + "\n";
}

std::string dimension_report_to_json(const SpectralReport& r, double tolerance) {
    Json doc;
    doc["command"] = "dimension";
    doc["lambda"] = fmt(r.lambda_estimate);
    doc["dimension"] = fmt(r.dimension_estimate);
    doc["tolerance"] = tolerance;
    doc["iterations_used"] = r.iterations_used;
    doc["certified_lambda_interval"] = {r.bounds.lower.decimal(), r.bounds.upper.decimal()};
    doc["provenance"] = {
        {"lambda", "dominant eigenvalue of the core transition block (power method)"},
        {"dimension", "ln(lambda) / ln(sqrt(2))"},
    };
    return doc.dump(2) + "\n";
}

std::string verification_report_to_json(const VerificationReport& r) {
    Json doc;
    doc["command"] = "verify";
    doc["depth_max"] = r.depth_max;
    Json checks = Json::array();
    for (const auto& check : r.checks)
        checks.push_back({{"name", check.name},
                          {"passed", check.passed},
                          {"detail", check.detail}});
    doc["checks"] = checks;
    if (r.first_covered_depth) {
        doc["first_covered_depth"] = *r.first_covered_depth;
        doc["covered_distinct"] = r.covered_at_first.distinct;
        doc["covered_sequences"] = r.covered_at_first.sequences;
    } else {
        doc["first_covered_depth"] = nullptr;
    }
    if (r.first_divergence) {
        doc["first_divergence"] = {
            {"depth", r.first_divergence->depth},
            {"code", r.first_divergence->code},
            {"geometric", r.first_divergence->geometric.str()},
            {"symbolic", r.first_divergence->symbolic.str()},
        };
    }
    doc["all_passed"] = r.all_passed;
    doc["provenance"] = {
        {"covered_distinct", "distinct all-ones-type triangles at the first covered depth"},
        {"covered_sequences", "index sequences landing on covered triangles at that depth"},
    };
    return doc.dump(2) + "\n";
}

std::string verification_report_to_text(const VerificationReport& r) {
    std::string out;
    for (const auto& check : r.checks)
        out += std::string(check.passed ? "PASS" : "FAIL") + " " + check.name + " (" +
               check.detail + ")\n";
    out += std::string(r.all_passed ? "PASS" : "FAIL") + " overall\n";
    return out;
}

}  // namespace levy
