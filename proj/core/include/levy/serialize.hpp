#pragma once

#include <string>

#include "levy/spectral.hpp"
#include "levy/typecensus.hpp"
#include "levy/typedyn.hpp"
#include "levy/verify.hpp"

namespace levy {

/// Census as a JSON document: {"counts": {"<code>": "<count>", ...}, ...}.
/// Codes and counts are decimal strings; entries are sorted by code.
std::string census_to_json(const TypeCensus& census, int depth, const std::string& engine);

/// Newline-delimited "code class" lines in canonical row order.
std::string stable_set_to_text(const TypeClassification& cls, int depth);

/// JSON variant of the stable-set export.
std::string stable_set_to_json(const TypeClassification& cls, int depth);

/// Plain-text triplets: header "rows cols nnz", then one "i j value" line
/// per nonzero entry (row-major, 0-based indices).
std::string matrix_to_triplets(const IntMatrix& m);

/// JSON metadata for a transition matrix: the code order and the
/// class-boundary indices of the block layout.
std::string matrix_metadata_json(const TransitionMatrix& m);

/// Full spectral report as JSON. Certified bounds are decimal strings.
std::string spectral_report_to_json(const SpectralReport& r);

/// Compact dimension report as JSON.
std::string dimension_report_to_json(const SpectralReport& r, double tolerance);

std::string verification_report_to_json(const VerificationReport& r);

std::string verification_report_to_text(const VerificationReport& r);

}  // namespace levy
