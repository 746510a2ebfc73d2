#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lce {

enum class ErrorKind {
  overlap,
  range,
  loop,
  duplicate,
  bijection,
  incomplete,
  infeasible_ordering,
  membership,
  cap_exceeded,
  invalid_model,
  invalid_instance,
  invalid_certificate,
  self_loop,
  parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax or count error in a text instance, tagged with its 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lce
