#pragma once

#include <stdexcept>
#include <string>

namespace negdsd {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1; ParseError maps to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NEGDSD_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

NEGDSD_DEFINE_ERROR(NegativeMagnitude);
NEGDSD_DEFINE_ERROR(EmptySet);
NEGDSD_DEFINE_ERROR(UnknownNode);
NEGDSD_DEFINE_ERROR(ZeroDenominator);
NEGDSD_DEFINE_ERROR(NonPositiveC);
NEGDSD_DEFINE_ERROR(EmptyCList);
NEGDSD_DEFINE_ERROR(NegativeWeight);
NEGDSD_DEFINE_ERROR(TooLarge);
NEGDSD_DEFINE_ERROR(OutOfRange);
NEGDSD_DEFINE_ERROR(EmptyFilmography);
NEGDSD_DEFINE_ERROR(UnknownLayer);
NEGDSD_DEFINE_ERROR(BadParameters);

#undef NEGDSD_DEFINE_ERROR

/// Malformed input text. Carries the 1-based line number (0 when the error is
/// not tied to a line).
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace negdsd
