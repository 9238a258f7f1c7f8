#pragma once

#include <stdexcept>
#include <string>

namespace surfgerm {

struct InvalidGraph : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};

struct NotNegativeDefinite : std::runtime_error {
  NotNegativeDefinite() : std::runtime_error("intersection matrix is not negative definite") {}
};

struct InvalidM : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyDy : std::invalid_argument {
  EmptyDy() : std::invalid_argument("D_y has no component through the point") {}
};

struct InvalidBoundary : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input document error; `where` is a JSON-pointer-like location.
struct ParseError : std::runtime_error {
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), location(std::move(where)) {}
  std::string location;
};

struct MissingDData : std::runtime_error {
  MissingDData() : std::runtime_error("document has no D-data section") {}
};

}  // namespace surfgerm
