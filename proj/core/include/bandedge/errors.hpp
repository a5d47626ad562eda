#pragma once

#include <stdexcept>
#include <string>

namespace bandedge {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (NaN, negative
/// parameter, Re(u) <= 0 for a Laplace-domain quantity, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative method exhausted its budget or a sequence failed to decrease.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Evaluation too close to a pole of a rational expression.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Operation requested for the wrong Lorentzian coupling regime.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violates a structural identity (residue sums, root
/// distinctness).
class IdentityError : public Error {
 public:
  using Error::Error;
};

/// A density matrix left the physical region.
class PhysicalityError : public Error {
 public:
  using Error::Error;
};

/// Time marching ran away (|G| exceeded its bound).
class InstabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace bandedge
