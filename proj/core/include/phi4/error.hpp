#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace phi4 {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A graph exceeds the supported vertex count for canonical labelling.
class SizeExceeded : public Error {
 public:
  using Error::Error;
};

// An enumeration or order cap was exceeded (e.g. too many legs to pair).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A numeric evaluation would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t estimated_work)
      : Error(what + " (estimated work " + std::to_string(estimated_work) + ")"),
        estimated_work_(estimated_work) {}

  std::uint64_t estimated_work() const noexcept { return estimated_work_; }

 private:
  std::uint64_t estimated_work_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when a symbolic quantity (alpha, beta, gamma) has no numeric binding.
class UnboundSymbol : public Error {
 public:
  using Error::Error;
};

// Raised when a rational approximant has a pole on the integration path.
class SpuriousPole : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed; always indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace phi4
