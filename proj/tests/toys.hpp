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

// Small level systems whose Stark sums come out as round numbers.

#include <cmath>
#include <utility>
#include <vector>

#include "stark/physical_params.hpp"

namespace stark::toys {

struct Scale {
    double freq = 1.0;    // frequencies and widths
    double hbar = 1.0;
    double dipole = 1.0;
};

inline LevelSystem make(std::vector<double> freqs,
                        const std::vector<std::pair<int, int>>& links,
                        const std::vector<Complex>& values, Scale s = {}) {
    std::vector<Level> levels;
    for (std::size_t k = 0; k < freqs.size(); ++k)
        levels.push_back({"L" + std::to_string(k + 1), freqs[k] * s.freq});
    const auto n = static_cast<Eigen::Index>(freqs.size());
    SystemOperator d = SystemOperator::Zero(n, n);
    for (std::size_t i = 0; i < links.size(); ++i) {
        const auto [a, b] = links[i];
        d(a, b) = values[i] * s.dipole;
        d(b, a) = std::conj(values[i]) * s.dipole;
    }
    return LevelSystem(std::move(levels), std::move(d), s.hbar);
}

// One intermediate level two units below |E1>: Π₁(1) = 4/3, Π₁(0) = 1,
// Π₂ ≡ 0.
inline LevelSystem pi_k_toy() { return make({0.0, 5.0, -2.0}, {{0, 2}}, {1.0}); }

// ħ = d₁₂ = ω₂₁ = 1 and three intermediate levels with ω₂ⱼ = 2 give
// Π₂(1) − Π₁(1) = 3 · 4/3 = 4.
inline LevelSystem one_quantum_toy(Scale s = {}) {
    return make({0.0, 1.0, -1.0, -1.0, -1.0}, {{0, 1}, {1, 2}, {1, 3}, {1, 4}},
                {1.0, 1.0, 1.0, 1.0}, s);
}

// Mirror pair: every term of Π₂ reappears in Π₁, so Π₂ = Π₁ bit for bit.
// Level 3 couples to both emitter levels and carries Π₂₁.
inline LevelSystem mirror_toy(bool direct = true, Scale s = {}) {
    const double f = 10.0;
    std::vector<std::pair<int, int>> links = {{0, 2}, {1, 2}, {0, 3}, {1, 4}};
    std::vector<Complex> values = {1.0, 1.0, 1.0, 1.0};
    if (direct) {
        links.push_back({0, 1});
        values.push_back(1.0);
    }
    return make({0.0, 1.0, f, f - 1.0, f + 1.0}, links, values, s);
}

// Two-quantum toy at ω₂₁ = 1, Ω_r = 4: level 3 couples both emitter levels,
// level 4 tops up Π₂ so that Π₂(Ω_r) − Π₁(Ω_r) = |Π₂₁(Ω_r)|.
inline LevelSystem two_quantum_toy(Scale s = {}) {
    const double omega = 4.0;
    const double p21 = 1.0 / (9.0 + omega) + 1.0 / (10.0 - omega);
    const double stark_j = (1.0 / (-9.0 + omega) + 1.0 / (-9.0 - omega)) -
                           (1.0 / (-10.0 + omega) + 1.0 / (-10.0 - omega));
    const double top_up = (p21 - stark_j) / (1.0 / (8.0 + omega) + 1.0 / (8.0 - omega));
    return make({0.0, 1.0, 10.0, -7.0}, {{0, 2}, {1, 2}, {1, 3}},
                {1.0, 1.0, std::sqrt(top_up)}, s);
}

inline ResonanceSpec one_quantum_spec(double coupling = 1.0) {
    ResonanceSpec r;
    r.kind = ResonanceKind::one_quantum;
    r.omega21 = 1.0;
    r.omega_r = 1.0;
    r.coupling = coupling;
    return r;
}

// g is chosen so that χ = chi; Δω_c = Ω_r / width_ratio.
inline ResonanceSpec two_quantum_spec(const LevelSystem& sys, double chi, double width_ratio) {
    ResonanceSpec r;
    r.kind = ResonanceKind::two_quantum;
    r.omega21 = 1.0;
    r.omega_r = 4.0;
    r.omega_c = 3.0;
    r.delta_omega_c = r.omega_r / width_ratio;
    r.coupling = 1.0;
    r.g = chi * sys.hbar() / (r.coupling * std::abs(pi_21(sys, r.omega_r)));
    return r;
}

// The same resonance in units where frequencies, ħ and dipoles are
// multiplied by s. Γ carries ħ/d and g carries ħω/d.
inline ResonanceSpec rescaled(ResonanceSpec r, Scale s) {
    r.omega21 *= s.freq;
    r.omega_r *= s.freq;
    r.omega_c *= s.freq;
    r.delta_omega_c *= s.freq;
    r.coupling *= s.hbar / s.dipole;
    r.g *= s.hbar * s.freq / s.dipole;
    return r;
}

}  // namespace stark::toys
