#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qchev {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRank : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SystemMismatch : public Error {
 public:
  using Error::Error;
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

/// Raised when a group enumeration outgrows its cap; carries a lower bound on |W|.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t cap, std::uint64_t order_lower_bound)
      : Error("Weyl group enumeration exceeded cap " + std::to_string(cap) +
              " (order >= " + std::to_string(order_lower_bound) + ")"),
        cap_(cap),
        order_lower_bound_(order_lower_bound) {}

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t order_lower_bound() const noexcept { return order_lower_bound_; }

 private:
  std::uint64_t cap_;
  std::uint64_t order_lower_bound_;
};

/// A parabolic with a number of excluded nodes other than one (b2 != 1).
class InvalidParabolic : public Error {
 public:
  using Error::Error;
};

class RootInParabolic : public Error {
 public:
  using Error::Error;
};

class GradingError : public Error {
 public:
  using Error::Error;
};

/// The divisor times point product has no degree-1 term. Never expected; indicates a bug.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

class NoHomogeneousFactor : public Error {
 public:
  using Error::Error;
};

class ZeroScaling : public Error {
 public:
  using Error::Error;
};

class ScaledFactorsUnsupported : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qchev
