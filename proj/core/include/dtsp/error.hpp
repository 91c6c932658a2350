#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtsp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs that violate a documented precondition (bad partition, cap exceeded, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Raised when an exact solver refuses an instance larger than its configured cap.
class CapExceeded : public ValidationError {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : ValidationError(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class InvalidPartition : public ValidationError {
 public:
  InvalidPartition(std::size_t target, const std::string& why)
      : ValidationError("invalid partition at target " + std::to_string(target) + ": " + why), target_(target) {}

  std::size_t target() const noexcept { return target_; }

 private:
  std::size_t target_;
};

/// File-system and parse failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dtsp
