#pragma once

// JSON serialization for measures, moments, canonical data and reports.
// Complex numbers serialize as two-element arrays [re, im] everywhere;
// matrices as nested row-major arrays of those pairs.

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "mopuc/interval.hpp"
#include "mopuc/measures.hpp"
#include "mopuc/moment_space.hpp"
#include "mopuc/polynomial.hpp"

namespace mopuc {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json measure_to_json(const CircleMeasure& mu);
Json measure_to_json(const IntervalMeasure& mu);

using AnyMeasure = std::variant<CircleMeasure, IntervalMeasure>;

/// Parse `{"kind":"circle"|"interval","p":...,"atoms":[{"pos":...,"weight":...}]}`.
/// Malformed documents throw ParseError.
AnyMeasure measure_from_json(const Json& j, const Tolerances& tol = {});

Json moments_to_json(const MomentSequence& seq);
Json moments_to_json(const IntervalMomentSequence& s);
MomentSequence circle_moments_from_json(const Json& j, const Tolerances& tol = {});

Json canonical_to_json(const CanonicalSequence& cs);
Json canonical_to_json(const IntervalCanonical& ic);

Json polynomial_to_json(const MatrixPolynomial& poly);

Json geronimus_report_to_json(const GeronimusReport& report);

Json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace mopuc
