#pragma once

#include <stdexcept>
#include <string>

namespace qmlf {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A parameter violates its documented constraint (q outside (0,1), Re(s) <= 0, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// The requested point lies outside the region where the series converges.
class DomainError : public Error {
  public:
    using Error::Error;
};

// Gamma_q evaluated at a nonpositive integer.
class PoleError : public Error {
  public:
    using Error::Error;
};

// The term budget ran out before the truncation criterion was met.
class NonConvergence : public Error {
  public:
    using Error::Error;
};

// A denominator product vanished (e.g. (lambda q^eta; q)_inf == 0).
class DivisionByZero : public Error {
  public:
    using Error::Error;
};

} // namespace qmlf
