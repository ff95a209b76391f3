#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vabs {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One or more invariants of an input value do not hold.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Two values that must live over the same letters (or chain end to end) do not.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

// Two axes of a prospective abstraction space touch the same visual attribute.
class OverlappingAttributes : public Error {
 public:
  OverlappingAttributes(std::string tag, std::string axis_a, std::string axis_b);

  const std::string& tag() const noexcept { return tag_; }
  const std::string& axis_a() const noexcept { return axis_a_; }
  const std::string& axis_b() const noexcept { return axis_b_; }

 private:
  std::string tag_;
  std::string axis_a_;
  std::string axis_b_;
};

}  // namespace vabs
