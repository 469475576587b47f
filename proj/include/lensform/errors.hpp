#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lensform {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rotation parameter shares a factor with q, so the group action is not free.
class NotCoprime : public Error {
 public:
  explicit NotCoprime(std::size_t index)
      : Error("parameter p" + std::to_string(index + 1) + " is not coprime to q"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class EmptyParameters : public Error {
 public:
  EmptyParameters() : Error("lens space needs at least one rotation parameter") {}
};

class InvalidOrder : public Error {
 public:
  InvalidOrder() : Error("group order q must be positive") {}
};

/// Malformed lens literal; token() is the offending piece of input.
class ParseError : public Error {
 public:
  ParseError(std::string token, const std::string& why)
      : Error("cannot parse '" + token + "': " + why), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class SingularBasis : public Error {
 public:
  SingularBasis() : Error("generating matrix is singular") {}
};

/// An interpolated counting function disagreed with a direct count. Always a bug.
class InterpolationMismatch : public Error {
 public:
  explicit InterpolationMismatch(long long k)
      : Error("interpolation disagrees with direct count at k=" + std::to_string(k)) {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(std::size_t size)
      : Error("problem too large: " + std::to_string(size) + " basis elements"), size_(size) {}
  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t size_;
};

/// Spectral formulas need n >= 2 (manifold dimension at least 3).
class DimensionTooSmall : public Error {
 public:
  DimensionTooSmall() : Error("spectral computations require n >= 2") {}
};

}  // namespace lensform
