#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intercept {

/// Argument outside the domain of an operation (x off the generator,
/// speed outside (0, 1), malformed density, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested quantity is singular at the given point.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical invariant that an algorithm relies on did not hold.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called outside its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CoincidentVehiclesError : public DomainError {
 public:
  CoincidentVehiclesError(std::size_t first, std::size_t second)
      : DomainError("vehicles " + std::to_string(first + 1) + " and " +
                    std::to_string(second + 1) + " are coincident"),
        first_(first),
        second_(second) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class EmptyRegionError : public std::runtime_error {
 public:
  explicit EmptyRegionError(std::size_t vehicle)
      : std::runtime_error("dominance region of vehicle " +
                           std::to_string(vehicle + 1) + " is empty"),
        vehicle_(vehicle) {}

  std::size_t vehicle() const { return vehicle_; }

 private:
  std::size_t vehicle_;
};

}  // namespace intercept
