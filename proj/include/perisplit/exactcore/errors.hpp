#pragma once

#include <stdexcept>
#include <string>

namespace perisplit {

// Raised when an identity that must hold exactly does not.  The anchor
// names the identity so callers can report which one broke.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(std::string anchor, const std::string& what)
      : std::runtime_error(anchor + ": " + what), anchor_(std::move(anchor)) {}
  const std::string& anchor() const noexcept { return anchor_; }

 private:
  std::string anchor_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace perisplit
