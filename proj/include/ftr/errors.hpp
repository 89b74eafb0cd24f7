#pragma once

#include <stdexcept>
#include <string>

namespace ftr {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct NegativeBase : Error {
  explicit NegativeBase(const std::string& msg) : Error("negative base: " + msg) {}
};

struct MissingConstant : Error {
  std::string name;
  explicit MissingConstant(const std::string& n) : Error("missing constant: " + n), name(n) {}
};

struct ParseError : Error {
  long line;
  ParseError(long ln, const std::string& msg)
      : Error("parse error at line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

struct DuplicateName : Error {
  explicit DuplicateName(const std::string& n) : Error("duplicate constant name: " + n) {}
};

struct NonPositiveInput : Error {
  explicit NonPositiveInput(const std::string& msg) : Error("non-positive input: " + msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error("domain error: " + msg) {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& msg) : Error("out of range: " + msg) {}
};

struct Singular : Error {
  explicit Singular(const std::string& msg) : Error("singular: " + msg) {}
};

struct GridMismatch : Error {
  explicit GridMismatch(const std::string& msg) : Error("grid mismatch: " + msg) {}
};

struct ZeroFunction : Error {
  explicit ZeroFunction(const std::string& msg) : Error("zero function value: " + msg) {}
};

struct NonOscillatory : Error {
  explicit NonOscillatory(const std::string& msg) : Error("non-oscillatory: " + msg) {}
};

struct SameAxis : Error {
  explicit SameAxis(const std::string& msg) : Error("same axis: " + msg) {}
};

struct NotHermitian : Error {
  explicit NotHermitian(const std::string& msg) : Error("not hermitian: " + msg) {}
};

struct NotNormalized : Error {
  explicit NotNormalized(const std::string& msg) : Error("not normalized: " + msg) {}
};

struct ZeroL : Error {
  explicit ZeroL(const std::string& msg) : Error("zero dimension-index: " + msg) {}
};

struct ZeroMultiplicity : Error {
  explicit ZeroMultiplicity(const std::string& msg) : Error("zero multiplicity: " + msg) {}
};

struct NonPositiveMultiplicity : Error {
  explicit NonPositiveMultiplicity(const std::string& msg)
      : Error("non-positive multiplicity: " + msg) {}
};

struct ComplexRoots : Error {
  explicit ComplexRoots(const std::string& msg) : Error("complex roots: " + msg) {}
};

struct UnknownClass : Error {
  explicit UnknownClass(const std::string& msg) : Error("unknown quantity class: " + msg) {}
};

struct NotMateRespecting : Error {
  explicit NotMateRespecting(const std::string& msg) : Error("not mate-respecting: " + msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("config error: " + msg) {}
};

}  // namespace ftr
