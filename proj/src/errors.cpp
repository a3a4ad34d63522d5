#include "mvarg/errors.hpp"

namespace mvarg {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateArgument: return "DuplicateArgument";
    case Errc::UnknownEndpoint: return "UnknownEndpoint";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::ZeroOrNonfiniteWeight: return "ZeroOrNonfiniteWeight";
    case Errc::UnknownArgument: return "UnknownArgument";
    case Errc::MixedResolution: return "MixedResolution";
    case Errc::MissingTypicalityContext: return "MissingTypicalityContext";
    case Errc::NestedTypicality: return "NestedTypicality";
    case Errc::TypicalityInPreferenceFormula: return "TypicalityInPreferenceFormula";
    case Errc::LabellingNotInSigma: return "LabellingNotInSigma";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::EmptySigma: return "EmptySigma";
    case Errc::ConditioningOnNullEvent: return "ConditioningOnNullEvent";
    case Errc::BoundOutOfRange: return "BoundOutOfRange";
    case Errc::ZeroDistribution: return "ZeroDistribution";
    case Errc::LabelIndexOutOfRange: return "LabelIndexOutOfRange";
    case Errc::SyntaxError: return "SyntaxError";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(Errc code, int line, int column, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

}  // namespace mvarg
