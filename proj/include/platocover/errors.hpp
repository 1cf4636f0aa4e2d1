#pragma once

#include <stdexcept>
#include <string>

namespace platocover {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: non-prime modulus, gcd(n, p) != 1, unknown family, ...
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// p divides |G|; ordinary representation theory does not apply.
class ModularCaseUnsupported : public Error {
public:
  explicit ModularCaseUnsupported(const std::string& what)
      : Error("ModularCaseUnsupported: " + what) {}
};

class EvenPrimeUnsupported : public Error {
public:
  explicit EvenPrimeUnsupported(const std::string& what)
      : Error("EvenPrimeUnsupported: " + what) {}
};

/// A computed object failed one of its runtime self-checks.
class VerificationFailure : public Error {
public:
  explicit VerificationFailure(const std::string& what)
      : Error("VerificationFailure: " + what) {}
};

class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(const std::string& what)
      : Error("BudgetExceeded: " + what) {}
};

inline void verify(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

}  // namespace platocover
