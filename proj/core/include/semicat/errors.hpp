#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semicat {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input data (maps to CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

class NonAssociativeError : public InputError {
 public:
  NonAssociativeError(int a, int b, int c)
      : InputError("multiplication table is not associative at (" +
                   std::to_string(a) + ", " + std::to_string(b) + ", " +
                   std::to_string(c) + ")"),
        a(a), b(b), c(c) {}
  int a, b, c;
};

class IndexOutOfRangeError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// A precondition on the mathematical structure failed (exit code 1).
class StructureError : public Error {
 public:
  using Error::Error;
};

class NotRegularError : public StructureError {
 public:
  NotRegularError() : StructureError("semigroup is not regular") {}
  explicit NotRegularError(int witness)
      : StructureError("semigroup is not regular: element " +
                       std::to_string(witness) + " has no inverse"),
        witness(witness) {}
  int witness = -1;
};

class NotLeftReductiveError : public StructureError {
 public:
  NotLeftReductiveError(int a, int b)
      : StructureError("semigroup is not left reductive: elements " +
                       std::to_string(a) + " and " + std::to_string(b) +
                       " induce the same right translation"),
        a(a), b(b) {}
  int a, b;
};

class NoFactorizationError : public StructureError {
 public:
  explicit NoFactorizationError(int morphism)
      : StructureError("morphism " + std::to_string(morphism) +
                       " has no normal factorization"),
        morphism(morphism) {}
  int morphism;
};

class NotDownClosedError : public StructureError {
 public:
  NotDownClosedError(int missing, int member)
      : StructureError("down-set is not downward closed: class " +
                       std::to_string(missing) + " lies below member " +
                       std::to_string(member) + " but is absent"),
        missing(missing), member(member) {}
  int missing, member;
};

class ObjectNotConnectedError : public StructureError {
 public:
  explicit ObjectNotConnectedError(int object)
      : StructureError("object " + std::to_string(object) +
                       " is not the vertex of any idempotent cone in the down-set"),
        object(object) {}
  int object;
};

class NotInConnectionSemigroupError : public StructureError {
 public:
  NotInConnectionSemigroupError()
      : StructureError("cone does not belong to the connection semigroup") {}
};

class NotSupportedError : public StructureError {
 public:
  NotSupportedError()
      : StructureError("connected category is not supported") {}
};

class NotHomomorphismError : public StructureError {
 public:
  NotHomomorphismError(int a, int b)
      : StructureError("map is not a homomorphism: fails at pair (" +
                       std::to_string(a) + ", " + std::to_string(b) + ")"),
        a(a), b(b) {}
  int a, b;
};

class CCConditionViolatedError : public StructureError {
 public:
  using StructureError::StructureError;
};

/// A claimed isomorphism failed to verify.  This signals a bug, not a data
/// condition.
class IsoFailureError : public StructureError {
 public:
  using StructureError::StructureError;
};

/// Resource caps (exit code 3).
class CapError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public CapError {
 public:
  CapExceededError(const std::string& what, std::size_t limit)
      : CapError(what + " (cap " + std::to_string(limit) + ")"),
        limit(limit) {}
  std::size_t limit;
};

class SearchSpaceTooLargeError : public CapError {
 public:
  explicit SearchSpaceTooLargeError(std::size_t bound)
      : CapError("cone search exceeded " + std::to_string(bound) +
                 " partial assignments"),
        bound(bound) {}
  std::size_t bound;
};

}  // namespace semicat
