#include "evfuse/error.hpp"

namespace evfuse {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::NegativeOperand: return "NegativeOperand";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvertedResult: return "InvertedResult";
    case ErrorKind::NegativeScalar: return "NegativeScalar";
    case ErrorKind::InvalidAlpha: return "InvalidAlpha";
    case ErrorKind::UnknownTerm: return "UnknownTerm";
    case ErrorKind::EmptyFocalSet: return "EmptyFocalSet";
    case ErrorKind::NegativeMass: return "NegativeMass";
    case ErrorKind::MassSumViolation: return "MassSumViolation";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::TotalConflict: return "TotalConflict";
    case ErrorKind::EmptyEvidenceList: return "EmptyEvidenceList";
    case ErrorKind::AllZeroWeights: return "AllZeroWeights";
    case ErrorKind::InvalidWeight: return "InvalidWeight";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      detail_(message) {}

Error Error::with_context(const std::string& context) const {
    return Error(kind_, context + ": " + detail_);
}

} // namespace evfuse
