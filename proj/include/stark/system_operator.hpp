// Copyright 2026 The stark-qsde Authors
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

#include <complex>

#include <Eigen/Dense>

namespace stark {

using Complex = std::complex<double>;

// Dense operator on the emitter (or emitter ⊗ ancilla) Hilbert space.
using SystemOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

// Two-level basis order is (|E1>, |E2>): index 0 is the ground state.
namespace su2 {

SystemOperator identity();
SystemOperator ground_projector();   // |E1><E1|
SystemOperator excited_projector();  // |E2><E2| == R+ R-
SystemOperator raising();            // R+ = |E2><E1|
SystemOperator lowering();           // R- = |E1><E2|
SystemOperator r3();                 // (|E2><E2| - |E1><E1|) / 2

// Operator multiplying η·dΛ in the emitter's QSDE: 2·R3. With this
// normalization the Ito exponential reproduces the e^{iη} closed forms.
SystemOperator stark_operator();

}  // namespace su2

// Largest absolute entry.
double max_norm(const SystemOperator& m);

SystemOperator kron(const SystemOperator& a, const SystemOperator& b);

// Truncated bosonic annihilation operator on {|0>, ..., |cutoff>}.
SystemOperator annihilation(int cutoff);

}  // namespace stark
