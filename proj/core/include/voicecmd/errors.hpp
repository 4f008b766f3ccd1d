#pragma once

#include <stdexcept>
#include <string>

namespace voicecmd {

/// A command spec violates one of its invariants; the message names which.
class InvalidSpecError : public std::runtime_error {
 public:
  explicit InvalidSpecError(const std::string& what) : std::runtime_error(what) {}
};

class DuplicateIdError : public std::runtime_error {
 public:
  explicit DuplicateIdError(const std::string& id)
      : std::runtime_error("duplicate command id: " + id) {}
};

/// execute() was called with a result that is not Resolved.
class NotResolvedError : public std::logic_error {
 public:
  NotResolvedError() : std::logic_error("result is not a resolved call") {}
};

/// Wraps a failure raised by (or on the way into) a command handler.
class HandlerError : public std::runtime_error {
 public:
  explicit HandlerError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace voicecmd
