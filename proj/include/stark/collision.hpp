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

#include <cstdint>
#include <vector>

#include "stark/lindblad.hpp"
#include "stark/system_operator.hpp"

namespace stark {

// Repeated-interaction discretization of the emitter QSDE: per slice the
// emitter meets a fresh vacuum ancilla and evolves under
//   exp(−i(χ√dτ R+⊗a + χ√dτ R-⊗a† + η·2R3⊗a†a)).
// dB and dB† carry √dτ, dΛ ↦ a†a carries none.
struct CollisionConfig {
    double chi = 1.0;
    double eta = 0.0;
    double dtau = 1e-3;
    long n_slices = 1000;
    int fock_cutoff = 1;
    std::uint64_t rng_seed = 0;

    double total_time() const { return dtau * static_cast<double>(n_slices); }
    void validate() const;
};

// Joint generator and its exponential on system ⊗ ancilla, dimension
// 2·(fock_cutoff + 1). The exponential uses the Hermitian eigendecomposition.
SystemOperator collision_generator(const CollisionConfig& cfg);
SystemOperator step_unitary(const CollisionConfig& cfg);

// One slice: embed ρ ⊗ |0><0|, conjugate by `unitary`, trace out the ancilla.
SystemOperator collide(const SystemOperator& unitary, const SystemOperator& rho, int fock_cutoff);

// ρ at τ = k·dτ for k = 0..n_slices (the initial state is entry 0). Throws
// IntegrationError with the slice index when the trace drifts by more than
// 1e-8 or an eigenvalue drops below −1e-10.
std::vector<DensityMatrix> run_collisions(const CollisionConfig& cfg, const DensityMatrix& rho0);

struct ConvergenceRow {
    double dtau = 0.0;
    long n_slices = 0;
    double err_rho22 = 0.0;  // max over τ of |Δρ22|
    double err_phase = 0.0;  // max over τ of |Δ arg ρ21| (0 where ρ21 vanishes)
    double err = 0.0;        // max of the two
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    // Least-squares slope of log err against log dτ; NaN when every error is
    // zero (exact agreement) so no order is defined.
    double order = 0.0;
    bool exact = false;
    // Set when some halving failed to reduce the error. Not an error.
    bool non_monotone = false;
};

// Runs run_collisions at dτ, dτ/2, ..., dτ/2^halvings over the fixed horizon
// cfg_base.total_time() and compares with closed_form_evolution of
// stark_model(χ, η).
ConvergenceTable convergence_study(const CollisionConfig& cfg_base, const DensityMatrix& rho0,
                                   int halvings);

struct McResult {
    std::vector<DensityMatrix> mean;     // trajectory average at k·dτ, k = 0..n_slices
    std::vector<double> rho22_stderr;    // standard error of the ρ22 average
    std::vector<std::uint32_t> jumps;    // jump count per trajectory
    std::uint64_t total_jumps() const;
};

// Quantum-jump unraveling of `model` with jump √2·L and no-jump propagator
// exp(−i(H − iL†L)dτ). Trajectory k draws from Stream(seed, k); averages are
// reduced in fixed blocks in index order, so results do not depend on the
// number of worker threads. Throws TimestepError if a slice's jump
// probability can exceed 0.1.
McResult mc_unravel(const LindbladModel& model, const DensityMatrix& rho0, long n_traj,
                    double dtau, long n_slices, std::uint64_t seed, unsigned max_workers = 0);

}  // namespace stark
