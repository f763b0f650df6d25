#ifndef GJ_ERROR_HPP
#define GJ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gj {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A closure or enumeration exceeded its configured element cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A subset that had to be normal in its parent was not.
struct NotNormal : Error {
  using Error::Error;
};

// A subset that had to be abelian was not.
struct NotAbelian : Error {
  using Error::Error;
};

struct ReduciblePolynomial : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

// solve_conjugation found solutions but none invertible.
struct NoInvertibleSolution : Error {
  using Error::Error;
};

// A concrete element operation left the declared carrier
// (mismatched fields, degrees or dimensions).
struct InconsistentElement : Error {
  using Error::Error;
};

struct NotAHomomorphism : Error {
  using Error::Error;
};

// A loaded or constructed multiplication table violates the group laws.
struct InvalidTable : Error {
  using Error::Error;
};

// Extension data violated its preconditions (z not central, phi^m != id, ...).
struct InconsistentExtension : Error {
  using Error::Error;
};

// A subgroup designated for identification in a central product is not
// central (or is ambiguous).
struct NotCentral : Error {
  using Error::Error;
};

// The designated central subgroups of a central product do not match.
struct NotIsomorphicCenters : Error {
  using Error::Error;
};

// A construction finished but failed one of its declared invariant checks.
struct CertificateFailed : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct CorpusError : Error {
  using Error::Error;
};

}  // namespace gj

#endif
