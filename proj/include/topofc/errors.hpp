// errors.hpp - exception types shared by all topofc modules.
#pragma once

#include <stdexcept>
#include <string>

namespace topofc {

// Coarse category used by the CLI to pick an exit code.
enum class ErrorCategory { usage = 2, data = 3, numeric = 4 };

class Error : public std::runtime_error {
public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), category_(cat) {}
  ErrorCategory category() const noexcept { return category_; }

private:
  ErrorCategory category_;
};

// Dataset / file-format problems.
struct FormatError : Error {
  explicit FormatError(const std::string& msg) : Error(ErrorCategory::data, msg) {}
};

// Malformed token; carries file and 1-based line number in the message.
struct ParseError : Error {
  ParseError(const std::string& file, std::size_t line, const std::string& msg)
      : Error(ErrorCategory::data, file + ":" + std::to_string(line) + ": " + msg),
        line_number(line) {}
  std::size_t line_number;
};

struct CrossGraphEdgeError : Error {
  explicit CrossGraphEdgeError(const std::string& msg) : Error(ErrorCategory::data, msg) {}
};

struct IndexError : Error {
  explicit IndexError(const std::string& msg) : Error(ErrorCategory::data, msg) {}
};

struct PolicyError : Error {
  explicit PolicyError(const std::string& msg) : Error(ErrorCategory::data, msg) {}
};

struct DegenerateFeatureError : Error {
  explicit DegenerateFeatureError(const std::string& msg) : Error(ErrorCategory::data, msg) {}
};

struct NumericError : Error {
  explicit NumericError(const std::string& msg) : Error(ErrorCategory::numeric, msg) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error(ErrorCategory::data, msg) {}
};

struct ArgumentError : Error {
  explicit ArgumentError(const std::string& msg) : Error(ErrorCategory::usage, msg) {}
};

struct EmptySetError : Error {
  explicit EmptySetError(const std::string& msg) : Error(ErrorCategory::data, msg) {}
};

struct StratificationError : Error {
  explicit StratificationError(const std::string& msg) : Error(ErrorCategory::data, msg) {}
};

struct DegenerateLabelsError : Error {
  explicit DegenerateLabelsError(const std::string& msg) : Error(ErrorCategory::data, msg) {}
};

}  // namespace topofc
