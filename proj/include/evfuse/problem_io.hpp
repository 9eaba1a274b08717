#pragma once

#include "evfuse/fuzzy.hpp"
#include "evfuse/pipeline.hpp"

#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace evfuse {

inline constexpr std::string_view kSchemaVersion = "1";

// Ratings in the bundled dataset are printed to 4-5 decimals, so their sums
// drift from 1 by up to ~1.5e-4.
inline constexpr double kRatingSumTolerance = 1e-4;

enum class InputFormat { json };

struct LoadOptions {
    // Alpha-cut level used when a weight comes from a TFN scale.
    double alpha = 0.0;
    double rating_sum_tolerance = kRatingSumTolerance;
};

/// Parses and validates a problem document.
///
/// Every failure is an Error of kind ParseError (malformed JSON, with line
/// and column), SchemaError (wrong shape, missing or unknown fields) or
/// ValidationError (values that violate an invariant, with coordinates).
DecisionProblem load_problem(std::string_view text, const LoadOptions& options = {});
DecisionProblem load_problem(std::istream& in, InputFormat format = InputFormat::json, const LoadOptions& options = {});
DecisionProblem load_problem_file(const std::filesystem::path& path, const LoadOptions& options = {});

// The supplier-selection dataset shipped with the tool (JSON text).
std::string_view bundled_supplier_selection();

} // namespace evfuse
