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

#include <optional>
#include <vector>

#include "stark/ito_algebra.hpp"
#include "stark/system_operator.hpp"

namespace stark {

// Validated two-level density matrix in the (|E1>, |E2>) basis.
//
// Construction checks hermiticity and unit trace to `tol` and requires every
// eigenvalue to be at least −tol. Nothing is renormalized or projected.
class DensityMatrix {
public:
    static constexpr double kTolerance = 1e-12;

    explicit DensityMatrix(SystemOperator entries, double tol = kTolerance);

    static DensityMatrix excited();
    static DensityMatrix ground();
    // |ψ><ψ| for a normalized 2-vector.
    static DensityMatrix pure(const StateVector& psi, double tol = kTolerance);
    // Populations and coherence: ρ22 and ρ21 as returned by rho21().
    static DensityMatrix from_elements(double rho22, Complex rho21, double tol = kTolerance);

    const SystemOperator& entries() const { return entries_; }
    double rho11() const { return entries_(0, 0).real(); }
    double rho22() const { return entries_(1, 1).real(); }
    // Coherence that evolves as e^{-(γ/2)τ} e^{+iδτ}: the <E1|ρ|E2> entry.
    Complex rho21() const { return entries_(0, 1); }
    double trace() const { return entries_.trace().real(); }
    double purity() const;
    double min_eigenvalue() const;

private:
    SystemOperator entries_;
};

// Expectation rules of the photon-free field: <dB dB†> = dτ, every other
// first- and second-order increment moment vanishes.
struct VacuumState {};

struct Couplings {
    double chi = 0.0;
    double eta = 0.0;
};

// dρ/dτ = −i[δ R+R-, ρ] + 2LρL† − L†Lρ − ρL†L.
// γ = 2‖L‖² is the population decay rate and δ is the phase velocity of
// rho21(); the shift of the decaying level itself is −δ.
struct LindbladModel {
    std::optional<Couplings> couplings;
    double gamma = 0.0;
    double delta = 0.0;
    SystemOperator jump = SystemOperator::Zero(2, 2);

    SystemOperator hamiltonian() const { return delta * su2::excited_projector(); }
};

// Trace the one-step QSDE against the vacuum and match the result onto the
// normal form above. Only the dτ parts of dU ρ + ρ dU† + dU ρ dU† survive:
// drift ρ + ρ drift† + loss ρ loss†. Throws StructureError when the drift is
// not ∝ R+R-, gain not ∝ R+, loss not ∝ R-, or when the drift/loss pair does
// not conserve trace. The jump is oriented as χ√(1−cos η)/η · R-, with the
// sign of χ/η recovered from the loss and gauge channels.
LindbladModel derive_master_equation(const QsdeCoefficients& coeffs, VacuumState vac = {});

// derive_master_equation(coefficient_functions(chi, eta)) with the couplings
// recorded.
LindbladModel stark_model(double chi, double eta);

// Model with prescribed rates; jump = √(γ/2) R-.
LindbladModel rate_model(double gamma, double delta);

// S(η) = γ(χ, η)/γ(χ, 0) = 2(1 − cos η)/η².
double suppression_factor(double eta);

// Generator applied to an arbitrary 2×2 matrix (no validation).
SystemOperator lindblad_rhs(const LindbladModel& model, const SystemOperator& rho);

// Exact solution: ρ22(τ) = ρ22(0)e^{−γτ}, ρ21(τ) = ρ21(0)e^{−γτ/2}e^{iδτ}.
DensityMatrix closed_form_evolution(const LindbladModel& model, const DensityMatrix& rho0,
                                    double tau);

// Fixed-step RK4 on lindblad_rhs. Returns steps+1 states on a uniform grid
// (a single state when tau_end == 0). Throws IntegrationError when the trace
// drifts by more than 1e-8 or an eigenvalue drops below −1e-12.
std::vector<DensityMatrix> numerical_evolution(const LindbladModel& model,
                                               const DensityMatrix& rho0, double tau_end,
                                               int steps);

}  // namespace stark
