#pragma once

#include <stdexcept>
#include <string>

namespace lcrit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A checked 64-bit operation would have wrapped.
class OverflowError : public Error
{
  public:
    using Error::Error;
};

/// Caller-supplied input violates a documented precondition. The message
/// names the violated rule.
class PreconditionError : public Error
{
  public:
    using Error::Error;
};

/// A data file (curve registry, table fixtures) is missing or malformed.
class DataError : public Error
{
  public:
    using Error::Error;
};

} // namespace lcrit
