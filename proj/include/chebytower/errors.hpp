#pragma once

#include <stdexcept>
#include <string>

namespace chebytower {

/// Bad arguments: out-of-range indices, malformed input. CLI maps this to exit 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured guard (degree, enumeration size) would be exceeded. CLI exit 4.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two exact computation routes disagree, or an exactness assertion failed.
/// Always a bug somewhere: there is no tolerance in the exact core. CLI exit 3.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chebytower
