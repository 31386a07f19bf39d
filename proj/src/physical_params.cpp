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

#include "stark/physical_params.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "stark/errors.hpp"

namespace stark {

namespace {

bool is_pair(std::size_t k, std::size_t j) { return (k == 0 && j == 1) || (k == 1 && j == 0); }

// 1/den, refusing denominators within the resonance guard.
double guarded_inverse(double den, double nu, const LevelSystem& system, std::size_t k,
                       std::size_t j, const MappingOptions& opts) {
    const double guard = opts.resonance_guard_rel * std::abs(nu);
    if (std::abs(den) <= guard) {
        std::ostringstream os;
        os << "near-resonant denominator " << den << " for level pair ("
           << system.levels()[k].label << ", " << system.levels()[j].label << ") at frequency "
           << nu << "; perturbative Stark sum is invalid here";
        throw ParameterError(os.str());
    }
    return 1.0 / den;
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ParameterError(std::string(name) + " must be positive and finite");
    }
}

}  // namespace

LevelSystem::LevelSystem(std::vector<Level> levels, SystemOperator dipoles, double hbar)
    : levels_(std::move(levels)), dipoles_(std::move(dipoles)), hbar_(hbar) {
    const auto n = static_cast<Eigen::Index>(levels_.size());
    if (n < 2) throw ParameterError("level system needs at least the two emitter levels");
    if (dipoles_.rows() != n || dipoles_.cols() != n) {
        throw DimensionMismatch("dipole matrix must be " + std::to_string(n) + "x" +
                                std::to_string(n));
    }
    if (!(hbar_ > 0.0)) throw ParameterError("hbar must be positive");
    const double scale = std::max(1.0, max_norm(dipoles_));
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!std::isfinite(levels_[k].frequency)) {
            throw ParameterError("level " + levels_[k].label + " has a non-finite frequency");
        }
        if (std::abs(dipoles_(k, k)) > 0.0) {
            throw ParameterError("dipole matrix must have a zero diagonal (level " +
                                 levels_[k].label + ")");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::abs(dipoles_(k, j) - std::conj(dipoles_(j, k))) > 1e-12 * scale) {
                throw ParameterError("dipole matrix is not Hermitian at (" + levels_[k].label +
                                     ", " + levels_[j].label + ")");
            }
            if (k != j && dipoles_(k, j) != Complex(0.0) &&
                levels_[k].frequency == levels_[j].frequency) {
                throw ParameterError("dipole-coupled levels " + levels_[k].label + " and " +
                                     levels_[j].label + " are degenerate");
            }
        }
    }
}

double LevelSystem::omega(std::size_t k, std::size_t j) const {
    return levels_.at(k).frequency - levels_.at(j).frequency;
}

LevelSystem LevelSystem::swapped_pair() const {
    std::vector<Level> levels = levels_;
    std::swap(levels[0], levels[1]);
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(static_cast<Eigen::Index>(size()));
    perm.setIdentity();
    perm.indices()[0] = 1;
    perm.indices()[1] = 0;
    SystemOperator d = perm * dipoles_ * perm.transpose();
    return LevelSystem(std::move(levels), std::move(d), hbar_);
}

double pi_k(const LevelSystem& system, std::size_t k, double nu, const MappingOptions& opts) {
    if (k >= system.size()) throw ParameterError("pi_k: level index out of range");
    double sum = 0.0;
    for (std::size_t j = 0; j < system.size(); ++j) {
        if (j == k || is_pair(k, j)) continue;
        const double weight = std::norm(system.dipoles()(k, j)) / system.hbar();
        if (weight == 0.0) continue;
        const double w = system.omega(k, j);
        sum += weight * (guarded_inverse(w + nu, nu, system, k, j, opts) +
                         guarded_inverse(w - nu, nu, system, k, j, opts));
    }
    return sum;
}

double pi_composite(const LevelSystem& system, double omega, double omega_prime,
                    const MappingOptions& opts) {
    // Differences first: the two sums are often nearly equal.
    return 0.5 * ((pi_k(system, 1, omega, opts) - pi_k(system, 0, omega, opts)) +
                  (pi_k(system, 1, omega_prime, opts) - pi_k(system, 0, omega_prime, opts)));
}

Complex pi_21(const LevelSystem& system, double omega, const MappingOptions& opts) {
    Complex sum = 0.0;
    for (std::size_t j = 2; j < system.size(); ++j) {
        const Complex weight = system.dipoles()(1, j) * system.dipoles()(j, 0) / system.hbar();
        if (weight == Complex(0.0)) continue;
        sum += weight * (guarded_inverse(system.omega(j, 1) + omega, omega, system, j, 1, opts) +
                         guarded_inverse(system.omega(j, 0) - omega, omega, system, j, 0, opts));
    }
    return sum;
}

MappedParameters map_one_quantum(const ResonanceSpec& spec, const LevelSystem& system,
                                 const MappingOptions& opts) {
    if (spec.kind != ResonanceKind::one_quantum) {
        throw ParameterError("map_one_quantum: resonance kind is not one-quantum");
    }
    require_positive(spec.omega21, "omega21");
    require_positive(spec.omega_r, "Omega_r");
    const double detuning = std::abs(spec.omega_r - spec.omega21) / spec.omega21;
    if (detuning > opts.resonance_tolerance) {
        throw ParameterError("one-quantum resonance violated: |Omega_r - omega21|/omega21 = " +
                             std::to_string(detuning));
    }
    const double d12 = std::abs(system.dipoles()(0, 1));
    if (d12 == 0.0) {
        throw ParameterError("forbidden transition: d12 = 0, the one-quantum channel is absent");
    }

    const double hbar = system.hbar();
    const double reference = 2.0 * d12 * d12 / (hbar * spec.omega21);
    const double diff = pi_composite(system, spec.omega21, spec.omega21, opts);

    MappedParameters out;
    out.chi = spec.coupling * d12 / hbar;
    out.eta = out.chi * out.chi * diff / reference;
    out.ratio = std::abs(diff) / reference;
    out.stark_significant = out.ratio >= opts.stark_significance;
    out.eta_order_unity = std::abs(out.eta) >= opts.eta_order_unity;
    return out;
}

MappedParameters map_two_quantum(const ResonanceSpec& spec, const LevelSystem& system,
                                 const MappingOptions& opts) {
    if (spec.kind != ResonanceKind::two_quantum) {
        throw ParameterError("map_two_quantum: resonance kind is not two-quantum");
    }
    require_positive(spec.omega21, "omega21");
    require_positive(spec.omega_r, "Omega_r");
    require_positive(spec.delta_omega_c, "delta_omega_c");
    const double width_ratio = spec.delta_omega_c / spec.omega_r;
    if (width_ratio > opts.cavity_width_ratio_max) {
        throw ParameterError("cavity is not narrow: delta_omega_c/Omega_r = " +
                             std::to_string(width_ratio));
    }
    const double detuning = std::abs(spec.omega_r - spec.omega_c - spec.omega21) / spec.omega21;
    if (detuning > opts.resonance_tolerance) {
        throw ParameterError(
            "Raman resonance violated: |Omega_r - omega_c - omega21|/omega21 = " +
            std::to_string(detuning));
    }

    const double p21 = std::abs(pi_21(system, spec.omega_r, opts));
    if (p21 == 0.0) {
        throw ParameterError("vanishing two-photon matrix element Pi_21(Omega_r)");
    }
    const double g = spec.g != 0.0 ? spec.g : spec.coupling * spec.delta_omega_c;
    const double stark = pi_composite(system, spec.omega_r, spec.omega_r, opts);

    MappedParameters out;
    out.chi = g * spec.coupling * p21 / system.hbar();
    out.ratio = stark * spec.omega_r / (p21 * spec.delta_omega_c);
    out.eta = out.chi * out.ratio;
    out.stark_significant = std::abs(out.ratio) >= opts.stark_significance;
    out.eta_order_unity = std::abs(out.eta) >= opts.eta_order_unity;
    return out;
}

MappedParameters map_parameters(const ResonanceSpec& spec, const LevelSystem& system,
                                const MappingOptions& opts) {
    return spec.kind == ResonanceKind::one_quantum ? map_one_quantum(spec, system, opts)
                                                   : map_two_quantum(spec, system, opts);
}

}  // namespace stark
