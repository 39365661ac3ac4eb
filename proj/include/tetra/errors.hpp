#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tetra {

// Thrown when the oracle could not separate two towers within its digit cap.
// Never a silent wrong answer: callers either raise the cap or give up.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t budget)
      : std::runtime_error(what), budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

// A closed form was asked for a height below the range it is stated for.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The digit count of a tower is too large to be certified exactly.
class NotRepresentable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tetra
