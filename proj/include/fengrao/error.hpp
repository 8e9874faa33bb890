#pragma once

#include <stdexcept>
#include <string>

namespace fengrao {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorKind {
    invalid_argument,
    parse,
    not_member,
    not_arf,
    overflow,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class InvalidArgument : public Error {
  public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorKind::invalid_argument, what) {}
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

class NotMember : public Error {
  public:
    explicit NotMember(const std::string& what) : Error(ErrorKind::not_member, what) {}
};

class NotArf : public Error {
  public:
    explicit NotArf(const std::string& what) : Error(ErrorKind::not_arf, what) {}
};

class OverflowError : public Error {
  public:
    explicit OverflowError(const std::string& what) : Error(ErrorKind::overflow, what) {}
};

}  // namespace fengrao
