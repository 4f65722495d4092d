#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracspec {

/// A precondition on an argument was violated (bad vertex, loop edge,
/// parameter outside the domain of a theorem, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input (graph6, edge list, half-integer literal) could not be parsed.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InvalidInput(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An exact/exhaustive routine was asked to run beyond its supported size.
class LimitExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Power iteration hit its iteration cap before the residual dropped below
/// the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(double estimate, double residual, std::size_t iterations)
      : std::runtime_error("power iteration did not converge: estimate " + std::to_string(estimate) +
                           ", residual " + std::to_string(residual) + " after " +
                           std::to_string(iterations) + " iterations"),
        estimate_(estimate),
        residual_(residual),
        iterations_(iterations) {}

  double estimate() const noexcept { return estimate_; }
  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double estimate_;
  double residual_;
  std::size_t iterations_;
};

}  // namespace fracspec
