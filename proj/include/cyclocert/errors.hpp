#pragma once

#include <stdexcept>
#include <string>

namespace cyclocert {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exact quotient over the integers was requested but does not exist.
class NotDivisible : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

class NotMonic : public Error {
public:
  using Error::Error;
};

class NotADivisor : public Error {
public:
  using Error::Error;
};

/// Parameters violate an identity's hypotheses (non-prime p, p | r, ...).
class BadParameters : public Error {
public:
  using Error::Error;
};

class BadInput : public Error {
public:
  using Error::Error;
};

/// Two representation-ring elements of different group orders were combined.
class OrderMismatch : public Error {
public:
  using Error::Error;
};

class MalformedCertificate : public Error {
public:
  using Error::Error;
};

/// Text that does not follow the canonical coefficient or element format.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace cyclocert
