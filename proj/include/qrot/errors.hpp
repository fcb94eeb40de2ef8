#pragma once

#include <stdexcept>
#include <string>

namespace qrot {

struct CapExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OddGroundSet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroundSetMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyWord : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotComparable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotNonCrossing : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(std::size_t row)
      : std::runtime_error("matrix is singular (elimination failed at row " +
                           std::to_string(row) + ")"),
        row(row) {}
  std::size_t row;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CacheCorrupt : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qrot
