#ifndef HALFINT_ERRORS_HPP
#define HALFINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace halfint {

enum class Errc {
  NotMonic,
  NotSquarefree,
  FieldMismatch,
  DivisionByZero,
  Singular,
  BadLevel,
  BadWeight,
  RankDeficient,
  InsufficientRows,
  ZeroLeadingCoefficient,
  PrecisionTooSmall,
  NoPivotInWindow,
  PivotViolation,
  ShapeMismatch,
  EmptyWindow,
  ParseError,
  FieldSpecError,
  BadArgument,
  IoError,
};

const char* errc_name(Errc c);

/// Library-wide exception. ParseError carries a 1-based line/column.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Error(Errc code, std::string msg, long line, long column)
      : std::runtime_error(std::move(msg)), code_(code), line_(line), column_(column) {}

  Errc code() const { return code_; }
  long line() const { return line_; }
  long column() const { return column_; }

 private:
  Errc code_;
  long line_ = 0;
  long column_ = 0;
};

[[noreturn]] inline void fail(Errc code, std::string msg) { throw Error(code, std::move(msg)); }

}  // namespace halfint

#endif
