/* errors.hpp -- exception types shared across the library */

#ifndef EXPANSE_ERRORS_HPP
#define EXPANSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expanse {

// A hypothesis required by an operation does not hold for the given input.
// Distinct from a predicate returning false: predicates answer questions,
// premise errors mean the question itself was ill-posed for this input.
class premise_error : public std::invalid_argument {
 public:
  premise_error(std::string premise, const std::string& detail)
      : std::invalid_argument(premise + ": " + detail), premise_(std::move(premise)) {}

  const std::string& premise() const noexcept { return premise_; }

 private:
  std::string premise_;
};

// A computation would exceed the configured enumeration budget.  Callers can
// retry with a larger budget; the CLI maps this to its own exit code.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& detail) : std::runtime_error(detail) {}
};

}  // namespace expanse

#endif  // EXPANSE_ERRORS_HPP
