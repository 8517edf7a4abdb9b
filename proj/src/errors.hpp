#pragma once

#include <stdexcept>

namespace rdpf {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A type invariant was violated: non-positive variance, alpha in {0,1},
// a negative tolerance, and the like.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// The requested quantity is undefined: the divergence integral diverges,
// or f(x) is evaluated outside its domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

// Parameter outside its admissible range, e.g. a perception budget above
// the attainable supremum.
class RangeError : public Error {
  public:
    using Error::Error;
};

// C = 0: the stationary point collapses and x = 0 is the only root.
class DegenerateError : public Error {
  public:
    using Error::Error;
};

// f(x0) = 0: double root, no strict sign change to bracket.
class TangentError : public Error {
  public:
    using Error::Error;
};

// Bracket verification failed even after adaptive widening.
class NoSignChangeError : public Error {
  public:
    using Error::Error;
};

// A computed root does not reproduce the target divergence on
// back-substitution.
class SpuriousRootError : public Error {
  public:
    using Error::Error;
};

// No admissible (rho2, theta) pair satisfies both constraints.
class InfeasibleError : public Error {
  public:
    using Error::Error;
};

// Quadrature depth exhausted before the requested tolerance was met.
class NonConvergentError : public Error {
  public:
    using Error::Error;
};

}  // namespace rdpf
