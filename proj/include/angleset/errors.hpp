#pragma once

#include <stdexcept>
#include <string>

namespace angleset {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size computation (point count, 2^k, side^d) does not fit in 64 bits.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic would exceed 128 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Input produced an empty or otherwise unusable object.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter lies outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural precondition (containment, dimension, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Problem size is above a configured computational cap.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& cap_name, std::size_t cap, std::size_t requested)
      : Error(cap_name + " exceeded: requested " + std::to_string(requested) + " points, cap is " +
              std::to_string(cap)),
        cap_name_(cap_name),
        cap_(cap),
        requested_(requested) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t cap() const noexcept { return cap_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
  std::size_t requested_;
};

}  // namespace angleset
