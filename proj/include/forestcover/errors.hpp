#pragma once

#include <stdexcept>
#include <string>

namespace forestcover {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad file, bad weight, bad parameter).
class InstanceError : public Error {
 public:
  using Error::Error;
};

// A Forest or Tree that violates its structural invariants.
class InvalidForest : public InstanceError {
 public:
  using InstanceError::InstanceError;
};

// The solver could not finish: iteration cap, numerical breakdown, infeasible LP.
class SolverError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to run beyond its configured budget.
class BudgetExceeded : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace forestcover
