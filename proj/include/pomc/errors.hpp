#pragma once

#include <stdexcept>
#include <string>

namespace pomc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The input pair relation is not antisymmetric after closure.
struct CycleError : Error {
  CycleError(const std::string& msg, std::string a, std::string b)
      : Error(msg), first(std::move(a)), second(std::move(b)) {}
  std::string first, second;  // one witnessing pair p <= q <= p, p != q
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct UnboundVariableError : Error {
  explicit UnboundVariableError(const std::string& name)
      : Error("unbound variable: " + name), variable(name) {}
  std::string variable;
};

struct DuplicateVariableError : Error {
  explicit DuplicateVariableError(const std::string& name)
      : Error("duplicate variable: " + name), variable(name) {}
  std::string variable;
};

struct TrivialPosetError : Error {
  TrivialPosetError() : Error("poset has fewer than 2 elements") {}
};

struct EmptyDomainError : Error {
  explicit EmptyDomainError(const std::string& var)
      : Error("empty domain for variable " + var), variable(var) {}
  std::string variable;
};

struct BudgetExceededError : Error {
  using Error::Error;
};

struct IllFormedHypergraphError : Error {
  using Error::Error;
};

struct FormatError : Error {
  using Error::Error;
};

}  // namespace pomc
