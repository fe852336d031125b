#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace astopo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidNode : public Error {
 public:
  using Error::Error;
};

class NoIncidentEdge : public Error {
 public:
  using Error::Error;
};

// Raised when no node outside the forbidden set can receive a link.
class NoAttachableNode : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = "")
      : Error((source.empty() ? "line " : source + ":") + std::to_string(line) + ": " +
              detail),
        line_(line),
        detail_(detail) {}

  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

}  // namespace astopo
