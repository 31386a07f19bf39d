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

#include <string>
#include <vector>

#include "stark/system_operator.hpp"

namespace stark {

struct Level {
    std::string label;
    double frequency = 0.0;  // E_k / ħ
};

// Multi-level emitter data in one self-consistent unit system. Levels 0 and 1
// are the ground |E1> and excited |E2> states of the two-level reduction;
// further levels are intermediate states for the Stark sums.
// ω_kj = ω_k − ω_j.
class LevelSystem {
public:
    LevelSystem(std::vector<Level> levels, SystemOperator dipoles, double hbar);

    std::size_t size() const { return levels_.size(); }
    const std::vector<Level>& levels() const { return levels_; }
    const SystemOperator& dipoles() const { return dipoles_; }
    double hbar() const { return hbar_; }
    double omega(std::size_t k, std::size_t j) const;

    // Same physics with levels 0 and 1 exchanged.
    LevelSystem swapped_pair() const;

private:
    std::vector<Level> levels_;
    SystemOperator dipoles_;
    double hbar_;
};

enum class ResonanceKind { one_quantum, two_quantum };

struct ResonanceSpec {
    ResonanceKind kind = ResonanceKind::one_quantum;
    double omega21 = 0.0;  // renormalized transition frequency
    double omega_r = 0.0;  // field central frequency Ω_r
    double coupling = 0.0; // flat coupling Γ
    // two-quantum only
    double omega_c = 0.0;
    double delta_omega_c = 0.0;
    double g = 0.0;  // atom–cavity coupling; 0 means Γ·Δω_c
};

// Thresholds for "≈" and "≫" claims. None of these are physics.
struct MappingOptions {
    double resonance_guard_rel = 1e-6;   // |ω_kj ± ν| must exceed this · |ν|
    double resonance_tolerance = 0.1;    // allowed relative detuning from resonance
    double cavity_width_ratio_max = 0.1; // Δω_c / Ω_r
    double stark_significance = 10.0;    // ratio above which the Stark channel matters
    double eta_order_unity = 1.0;        // |η| at or above which η counts as O(1)
};

// Stark sum Π_k(ν) = Σ_j |d_kj|²/ħ (1/(ω_kj + ν) + 1/(ω_kj − ν)).
// The direct 1↔2 dipole is the transition itself and never enters a Stark
// sum. Throws ParameterError on near-resonant denominators.
double pi_k(const LevelSystem& system, std::size_t k, double nu,
            const MappingOptions& opts = {});

// Π(ω, ω′) = ½{Π₂(ω) + Π₂(ω′) − Π₁(ω) − Π₁(ω′)} with Π₁, Π₂ the sums of
// levels 0 and 1.
double pi_composite(const LevelSystem& system, double omega, double omega_prime,
                    const MappingOptions& opts = {});

// Two-photon element Π₂₁(ω) = Σ_j d_2j d_j1/ħ (1/(ω_j2 + ω) + 1/(ω_j1 − ω))
// over intermediate levels.
Complex pi_21(const LevelSystem& system, double omega, const MappingOptions& opts = {});

struct MappedParameters {
    double chi = 0.0;
    double eta = 0.0;
    // one-quantum: |Π₂ − Π₁| / (2|d₁₂|²/(ħω₂₁)); two-quantum: η/χ.
    double ratio = 0.0;
    bool stark_significant = false;  // one-quantum: ratio ≥ stark_significance
    bool eta_order_unity = false;    // two-quantum: |η| ≥ eta_order_unity
};

// χ = Γ|d₁₂|/ħ,  η = χ² (Π₂(ω₂₁) − Π₁(ω₂₁)) / (2|d₁₂|²/(ħω₂₁)).
MappedParameters map_one_quantum(const ResonanceSpec& spec, const LevelSystem& system,
                                 const MappingOptions& opts = {});

// χ = gΓ|Π₂₁(Ω_r)|/ħ,  η = χ (Π₂(Ω_r) − Π₁(Ω_r)) Ω_r / (|Π₂₁(Ω_r)| Δω_c).
// The phase of Π₂₁ is absorbed into R±.
MappedParameters map_two_quantum(const ResonanceSpec& spec, const LevelSystem& system,
                                 const MappingOptions& opts = {});

MappedParameters map_parameters(const ResonanceSpec& spec, const LevelSystem& system,
                                const MappingOptions& opts = {});

}  // namespace stark
