#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jsrlab {

// Iterative solver failed to converge within its iteration cap. Carries the
// final residual so callers can distinguish "close" from "garbage".
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

// Matrix required to be invertible is singular or too ill-conditioned.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, double condition)
      : std::runtime_error(what + " (condition estimate " + std::to_string(condition) + ")"),
        condition_(condition) {}

  double condition() const { return condition_; }

 private:
  double condition_;
};

// Enumeration ran out of node budget. Carries progress so partial results
// can be reported.
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(const std::string& what, std::uint64_t nodes_visited)
      : std::runtime_error(what), nodes_visited_(nodes_visited) {}

  std::uint64_t nodes_visited() const { return nodes_visited_; }

 private:
  std::uint64_t nodes_visited_;
};

}  // namespace jsrlab
