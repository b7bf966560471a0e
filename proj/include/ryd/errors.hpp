// Copyright 2026 rydsim contributors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ryd {

// Invalid call arguments (dimension mismatches, out-of-range sites, ...).
// Mapped to exit code 1 by the CLI.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failures (factorization, iteration caps, step-size underflow).
// Mapped to exit code 2 by the CLI.
class solver_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class convergence_error : public solver_error {
 public:
  convergence_error(const std::string& msg, double best_residual)
      : solver_error(msg), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

// Problem size exceeds a configured guard.
class resource_error : public solver_error {
 public:
  using solver_error::solver_error;
};

// Adiabatic elimination failed (non-decaying excited state).
class elimination_error : public solver_error {
 public:
  using solver_error::solver_error;
};

// Time integrator failure (step underflow, inconsistent jump rates).
class integrator_error : public solver_error {
 public:
  using solver_error::solver_error;
};

// A state invariant was violated beyond numerical noise (e.g. a fidelity
// outside [0,1] by more than the clamping tolerance).
class invariant_error : public solver_error {
 public:
  using solver_error::solver_error;
};

}  // namespace ryd
