#pragma once

#include <stdexcept>
#include <string>

namespace propcol {

/// Malformed input: bad graph, ragged lists, unknown family, unparsable JSON.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// An exhaustive search would exceed its configured cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A guaranteed step failed. Reaching this means an implementation bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace propcol
