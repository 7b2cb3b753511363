#pragma once

#include <stdexcept>
#include <string>

namespace quadline {

// Base class of every error the library throws. The CLI maps ParseError to a
// usage failure and everything else to a domain failure.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Operands come from different coordinate fields.
class FieldMismatch : public Error
{
public:
  FieldMismatch(const std::string& lhs, const std::string& rhs)
      : Error("field mismatch: " + lhs + " vs " + rhs)
  {
  }
};

class ZeroDivisor : public Error
{
public:
  ZeroDivisor() : Error("division by zero") {}
};

// The zero triple is the zero vector of E, not a cycle.
class NotACycle : public Error
{
public:
  NotACycle() : Error("zero triple is not a cycle") {}
};

// Input outside the domain of an operation (isotropic cycle where a
// nonisotropic one is required, singular matrix, ...).
class DomainError : public Error
{
public:
  using Error::Error;
};

// Repeated points where pairwise distinct ones are required.
class DegenerateError : public Error
{
public:
  using Error::Error;
};

// Malformed literal or unsupported field specification.
class ParseError : public Error
{
public:
  using Error::Error;
};

}  // namespace quadline
