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

#include "stark/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "stark/errors.hpp"

namespace stark {

namespace {

double min_eigenvalue_of(const SystemOperator& m) {
    const SystemOperator herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<SystemOperator> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// Largest absolute entry outside the allowed (row, col) position.
double off_pattern(const SystemOperator& m, Eigen::Index row, Eigen::Index col) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != row || j != col) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

void check_channel(const SystemOperator& m, Eigen::Index row, Eigen::Index col,
                   const char* channel, const char* expected) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw StructureError(std::string(channel) + " channel is not a 2x2 operator");
    }
    const double tol = 1e-12 * std::max(1.0, max_norm(m));
    const double bad = off_pattern(m, row, col);
    if (bad > tol) {
        std::ostringstream os;
        os << channel << " channel is not proportional to " << expected
           << " (stray entry of magnitude " << bad << ")";
        throw StructureError(os.str());
    }
}

}  // namespace

DensityMatrix::DensityMatrix(SystemOperator entries, double tol) : entries_(std::move(entries)) {
    if (entries_.rows() != 2 || entries_.cols() != 2) {
        throw DimensionMismatch("density matrix must be 2x2");
    }
    if (!entries_.allFinite()) throw DomainError("density matrix has non-finite entries");
    const double herm = max_norm(SystemOperator(entries_ - entries_.adjoint()));
    if (herm > tol) {
        throw DomainError("density matrix is not Hermitian (deviation " + std::to_string(herm) +
                          ")");
    }
    const Complex tr = entries_.trace();
    if (std::abs(tr - 1.0) > tol) {
        throw DomainError("density matrix trace differs from 1 by " +
                          std::to_string(std::abs(tr - 1.0)));
    }
    const double lo = min_eigenvalue_of(entries_);
    if (lo < -tol) {
        throw DomainError("density matrix has negative eigenvalue " + std::to_string(lo));
    }
}

DensityMatrix DensityMatrix::excited() { return DensityMatrix(su2::excited_projector()); }
DensityMatrix DensityMatrix::ground() { return DensityMatrix(su2::ground_projector()); }

DensityMatrix DensityMatrix::pure(const StateVector& psi, double tol) {
    if (psi.size() != 2) throw DimensionMismatch("two-level state vector must have 2 entries");
    return DensityMatrix(psi * psi.adjoint(), tol);
}

DensityMatrix DensityMatrix::from_elements(double rho22, Complex rho21, double tol) {
    SystemOperator m(2, 2);
    m(0, 0) = 1.0 - rho22;
    m(1, 1) = rho22;
    m(0, 1) = rho21;
    m(1, 0) = std::conj(rho21);
    return DensityMatrix(std::move(m), tol);
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

double DensityMatrix::min_eigenvalue() const { return min_eigenvalue_of(entries_); }

LindbladModel derive_master_equation(const QsdeCoefficients& coeffs, VacuumState) {
    check_channel(coeffs.drift, 1, 1, "drift", "R+R-");
    check_channel(coeffs.gain, 1, 0, "gain", "R+");
    check_channel(coeffs.loss, 0, 1, "loss", "R-");

    // drift = −(γ/2 + iδ) R+R-,  loss = c R-  with |c|² = γ.
    const Complex a = coeffs.drift(1, 1);
    const Complex c = coeffs.loss(0, 1);
    LindbladModel model;
    model.gamma = -2.0 * a.real();
    model.delta = -a.imag();
    const double leak = std::abs(std::norm(c) - model.gamma);
    if (leak > 1e-10 * std::max(1.0, std::abs(model.gamma)) || model.gamma < -1e-14) {
        std::ostringstream os;
        os << "drift and loss channels do not conserve trace: -2 Re(drift) = " << model.gamma
           << ", |loss|^2 = " << std::norm(c);
        throw StructureError(os.str());
    }
    model.gamma = std::max(model.gamma, 0.0);
    // |L| = |c|/√2 rather than √(γ/2): near γ = 0 the square root would turn
    // rounding noise in γ into a visible jump amplitude.
    model.jump = (std::abs(c) / std::sqrt(2.0)) * su2::lowering();
    // Orientation: the jump χ√(1−cos η)/η·R- carries sgn(χ/η). The gauge
    // channel holds z = e^{iη} − 1 and loss = −(χ/η)z, so −c·z̄ = (χ/η)|z|².
    // At η = 0 there is no gauge term and loss = −iχ.
    const Complex z = coeffs.gauge(0, 0);
    const double orient = z != Complex(0.0) ? (-c * std::conj(z)).real() : -c.imag();
    if (orient < 0.0) model.jump = -model.jump;
    return model;
}

LindbladModel stark_model(double chi, double eta) {
    LindbladModel model = derive_master_equation(coefficient_functions(chi, eta));
    model.couplings = Couplings{chi, eta};
    return model;
}

LindbladModel rate_model(double gamma, double delta) {
    if (!(gamma >= 0.0)) throw DomainError("decay rate must be non-negative");
    LindbladModel model;
    model.gamma = gamma;
    model.delta = delta;
    model.jump = std::sqrt(0.5 * gamma) * su2::lowering();
    return model;
}

double suppression_factor(double eta) { return 2.0 * kernels::one_minus_cos_over_sq(eta); }

SystemOperator lindblad_rhs(const LindbladModel& model, const SystemOperator& rho) {
    const Complex i(0.0, 1.0);
    const SystemOperator h = model.hamiltonian();
    const SystemOperator& l = model.jump;
    const SystemOperator ldl = l.adjoint() * l;
    return -i * (h * rho - rho * h) + 2.0 * l * rho * l.adjoint() - ldl * rho - rho * ldl;
}

DensityMatrix closed_form_evolution(const LindbladModel& model, const DensityMatrix& rho0,
                                    double tau) {
    if (!(tau >= 0.0)) throw DomainError("closed_form_evolution: tau must be >= 0");
    const double survival = std::exp(-model.gamma * tau);
    const Complex coherence =
        rho0.rho21() * std::exp(-0.5 * model.gamma * tau) * std::polar(1.0, model.delta * tau);
    return DensityMatrix::from_elements(rho0.rho22() * survival, coherence);
}

std::vector<DensityMatrix> numerical_evolution(const LindbladModel& model,
                                               const DensityMatrix& rho0, double tau_end,
                                               int steps) {
    if (steps < 1) throw DomainError("numerical_evolution: steps must be >= 1");
    if (!(tau_end >= 0.0)) throw DomainError("numerical_evolution: tau_end must be >= 0");

    std::vector<DensityMatrix> out{rho0};
    if (tau_end == 0.0) return out;
    out.reserve(static_cast<std::size_t>(steps) + 1);

    const double h = tau_end / steps;
    SystemOperator rho = rho0.entries();
    for (int n = 1; n <= steps; ++n) {
        const SystemOperator k1 = lindblad_rhs(model, rho);
        const SystemOperator k2 = lindblad_rhs(model, rho + 0.5 * h * k1);
        const SystemOperator k3 = lindblad_rhs(model, rho + 0.5 * h * k2);
        const SystemOperator k4 = lindblad_rhs(model, rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double drift = std::abs(rho.trace() - 1.0);
        if (drift > 1e-8) {
            throw IntegrationError("RK4 trace drift " + std::to_string(drift) + " at step " +
                                       std::to_string(n),
                                   static_cast<std::size_t>(n));
        }
        const double lo = min_eigenvalue_of(rho);
        if (lo < -1e-12) {
            throw IntegrationError("RK4 state lost positivity (eigenvalue " + std::to_string(lo) +
                                       ") at step " + std::to_string(n),
                                   static_cast<std::size_t>(n));
        }
        out.emplace_back(rho, 1e-8);
    }
    return out;
}

}  // namespace stark
