#pragma once

#include <stdexcept>
#include <string>

namespace flowtype {

// Malformed input: bad JSON, schema violations, invalid elements. CLI exit 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition or search guard. CLI exit 3.
class PrecondError : public std::runtime_error {
 public:
  explicit PrecondError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace flowtype
