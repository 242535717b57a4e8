#pragma once

#include <stdexcept>
#include <string>

namespace irrwalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured work ceiling would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// An identity that must hold mathematically failed to verify.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace irrwalk
