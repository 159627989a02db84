#pragma once

#include <stdexcept>
#include <string>

namespace arrovian {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A tuple or profile dimension below the supported minimum (N >= 2, A >= 3)
// or above the packed-storage capacity.
class BadDimension : public Error {
public:
  using Error::Error;
};

// Two values that must share a dimension (length, individual count) do not.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

// A profile column classifies as a preference cycle. `individual` is 1-based.
class CycleColumn : public Error {
public:
  CycleColumn(int individual_index, const std::string& what)
      : Error(what), individual(individual_index) {}
  int individual;
};

// A row that must be strict contains an indifference entry.
class NonStrictRow : public Error {
public:
  using Error::Error;
};

// Profiles, enumeration and aggregation are only defined for 3 alternatives.
class UnsupportedAlternativeCount : public Error {
public:
  using Error::Error;
};

// An individual or component index outside its valid range.
class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

// A requested exhaustive computation exceeds the supported instance size.
class TooLarge : public Error {
public:
  using Error::Error;
};

// Malformed text input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line_no = 0, int column_no = 0)
      : Error(what), line(line_no), column(column_no) {}
  int line;
  int column;
};

// An operation's precondition does not hold. `axiom` names the failed
// property (e.g. "unanimity").
class PreconditionFailed : public Error {
public:
  PreconditionFailed(std::string axiom_name, const std::string& what)
      : Error(what), axiom(std::move(axiom_name)) {}
  std::string axiom;
};

// A constructive case split did not cover the instance at hand. Raised
// instead of silently assuming exhaustiveness of the case analysis.
class InternalDichotomyError : public Error {
public:
  using Error::Error;
};

}  // namespace arrovian
