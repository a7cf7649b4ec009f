#ifndef ODRA_ERRORS_HPP
#define ODRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace odra {

/// Error in a model source text, carrying the error class and the
/// position (1-based line/column) it was detected at.
class SourceError : public std::runtime_error {
 public:
  enum class Kind { Lex, Parse, NameResolution, Type, Range };

  SourceError(Kind kind, int line, int column, const std::string& message)
      : std::runtime_error(format(kind, line, column, message)),
        kind_(kind),
        line_(line),
        column_(column),
        message_(message) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

  static std::string kind_name(Kind kind) {
    switch (kind) {
      case Kind::Lex: return "lex";
      case Kind::Parse: return "parse";
      case Kind::NameResolution: return "name-resolution";
      case Kind::Type: return "type";
      case Kind::Range: return "range";
    }
    return "?";
  }

 private:
  static std::string format(Kind kind, int line, int column, const std::string& message) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + kind_name(kind) +
           " error: " + message;
  }

  Kind kind_;
  int line_;
  int column_;
  std::string message_;
};

/// Failure of an analysis step on well-formed input (state-space cap,
/// negative rate, pole, singular system, ...).
class AnalysisError : public std::runtime_error {
 public:
  explicit AnalysisError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace odra

#endif  // ODRA_ERRORS_HPP
