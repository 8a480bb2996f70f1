#pragma once

#include <stdexcept>
#include <string>

namespace badgame {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates a documented precondition (non-coprime point,
// negative radius, exponent pair that does not sum to one, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Construction constants are inconsistent with the requested mode.
class ParamsError : public Error {
 public:
  using Error::Error;
};

// An enumeration would need more denominators than the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long requested,
                 unsigned long long budget)
      : Error(what), requested_(requested), budget_(budget) {}

  unsigned long long requested() const { return requested_; }
  unsigned long long budget() const { return budget_; }

 private:
  unsigned long long requested_;
  unsigned long long budget_;
};

// A player's disc breaks the game rules.
class IllegalMove : public Error {
 public:
  using Error::Error;
};

// Alice found no surviving child in the forced color block.
class DeadEnd : public Error {
 public:
  using Error::Error;
};

// A verifier found a counterexample to a statement it was asked to check.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace badgame
