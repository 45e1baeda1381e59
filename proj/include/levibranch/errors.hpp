#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lvb {

/// Input failed validation (bad weight, unknown config key, bad index set).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Weyl group enumeration would exceed the configured guard.
class GroupSizeError : public std::runtime_error {
 public:
  GroupSizeError(std::uint64_t order, std::uint64_t guard)
      : std::runtime_error("Weyl group of order " + std::to_string(order) +
                           " exceeds the enumeration guard " + std::to_string(guard)),
        order_(order) {}
  std::uint64_t order() const noexcept { return order_; }

 private:
  std::uint64_t order_;
};

/// A character or table would exceed the configured memory budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

}  // namespace lvb
