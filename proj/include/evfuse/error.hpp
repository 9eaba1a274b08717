#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evfuse {

enum class ErrorKind {
    InvalidInterval,
    NegativeOperand,
    DivisionByZero,
    InvertedResult,
    NegativeScalar,
    InvalidAlpha,
    UnknownTerm,
    EmptyFocalSet,
    NegativeMass,
    MassSumViolation,
    FrameMismatch,
    TotalConflict,
    EmptyEvidenceList,
    AllZeroWeights,
    InvalidWeight,
    ParseError,
    SchemaError,
    ValidationError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library. The kind is the diagnostic class;
// the message carries details and, for pipeline/loader failures, the
// coordinates of the offending cell.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

    // Same kind, message prefixed with "<context>: ".
    Error with_context(const std::string& context) const;

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace evfuse
