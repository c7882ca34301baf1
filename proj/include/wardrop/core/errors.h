// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WARDROP_CORE_ERRORS_H_
#define WARDROP_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace wardrop {

// Root of every error the library throws. The CLI maps the concrete
// subclasses onto exit codes (input 2, convergence 3, invariant 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold for its inputs.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// The request exceeds an enumeration cap.
class RefusalError : public InputError {
 public:
  using InputError::InputError;
};

// The reference flow has zero social cost, so ratios are undefined.
class DegenerateInstanceError : public InputError {
 public:
  using InputError::InputError;
};

// An iterative solver hit its iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

// A structural invariant was violated (infeasible flow, stale cache, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// A graph object whose existence is guaranteed by theory was not found; the
// instance or flows do not satisfy the guarantee's hypotheses.
class StructuralError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace wardrop

#endif  // WARDROP_CORE_ERRORS_H_
