#pragma once

#include <stdexcept>
#include <string>

namespace mvarg {

enum class Errc {
  DuplicateArgument,
  UnknownEndpoint,
  DuplicateEdge,
  ZeroOrNonfiniteWeight,
  UnknownArgument,
  MixedResolution,
  MissingTypicalityContext,
  NestedTypicality,
  TypicalityInPreferenceFormula,
  LabellingNotInSigma,
  SizeLimitExceeded,
  EmptySigma,
  ConditioningOnNullEvent,
  BoundOutOfRange,
  ZeroDistribution,
  LabelIndexOutOfRange,
  SyntaxError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Parse failure carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(Errc code, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace mvarg
