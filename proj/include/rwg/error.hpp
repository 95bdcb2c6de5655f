#pragma once

#include <stdexcept>
#include <string>

namespace rwg {

enum class ErrorCode {
  kDomain,
  kMalformed,
  kResource,
  kInvalidIdentity,
  kInternal,
};

// Base of every exception thrown by the library. The C API maps `code()`
// onto rwg_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::kDomain, what) {}
};

class MalformedError : public Error {
 public:
  explicit MalformedError(const std::string& what)
      : Error(ErrorCode::kMalformed, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorCode::kResource, what) {}
};

class InvalidIdentityError : public Error {
 public:
  explicit InvalidIdentityError(const std::string& what)
      : Error(ErrorCode::kInvalidIdentity, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorCode::kInternal, what) {}
};

}  // namespace rwg
