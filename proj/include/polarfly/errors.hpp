#ifndef POLARFLY_ERRORS_HPP
#define POLARFLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polarfly {

struct NotPrimeError : std::invalid_argument {
  explicit NotPrimeError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ZeroInverseError : std::domain_error {
  ZeroInverseError() : std::domain_error("zero has no multiplicative inverse") {}
};

struct ZeroVectorError : std::invalid_argument {
  ZeroVectorError() : std::invalid_argument("zero vector has no projective representative") {}
};

struct FieldMismatchError : std::invalid_argument {
  FieldMismatchError() : std::invalid_argument("operands belong to different fields") {}
};

struct DegenerateInputError : std::invalid_argument {
  explicit DegenerateInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct OddQRequiredError : std::invalid_argument {
  explicit OddQRequiredError(int q)
      : std::invalid_argument("operation requires odd q, got q=" + std::to_string(q)) {}
};

struct NotQuadricError : std::invalid_argument {
  explicit NotQuadricError(int v)
      : std::invalid_argument("vertex " + std::to_string(v) + " is not a quadric") {}
};

struct TooManyReplicationsError : std::invalid_argument {
  explicit TooManyReplicationsError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct SameVertexError : std::invalid_argument {
  SameVertexError() : std::invalid_argument("source and destination are the same vertex") {}
};

struct AdjacentEndpointsError : std::invalid_argument {
  AdjacentEndpointsError()
      : std::invalid_argument("compact valiant requires non-adjacent endpoints") {}
};

struct LengthOutOfRangeError : std::invalid_argument {
  explicit LengthOutOfRangeError(int len)
      : std::invalid_argument("path length " + std::to_string(len) + " outside [1,4]") {}
};

struct NoAlternatePathError : std::invalid_argument {
  NoAlternatePathError()
      : std::invalid_argument("quadric-incident edges lie on no triangle") {}
};

struct InfeasiblePatternError : std::runtime_error {
  explicit InfeasiblePatternError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfeasibleDegreeError : std::invalid_argument {
  explicit InfeasibleDegreeError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace polarfly

#endif
