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

#include <array>
#include <string_view>

#include "stark/system_operator.hpp"

namespace stark {

// Element of the Hudson–Parthasarathy Ito algebra over a d-dimensional
// system: dt·c_dt + dB·c_dB + dB†·c_dBdag + dΛ·c_dLambda, with operator
// coefficients that commute with the increments.
struct ItoElement {
    SystemOperator c_dt;
    SystemOperator c_dB;
    SystemOperator c_dBdag;
    SystemOperator c_dLambda;

    static ItoElement zero(Eigen::Index dim);
    // Single increment with the identity as coefficient.
    static ItoElement dt(Eigen::Index dim);
    static ItoElement dB(Eigen::Index dim);
    static ItoElement dBdag(Eigen::Index dim);
    static ItoElement dLambda(Eigen::Index dim);

    Eigen::Index dim() const { return c_dt.rows(); }

    ItoElement& operator+=(const ItoElement& other);
    ItoElement& operator-=(const ItoElement& other);
    ItoElement& operator*=(Complex s);

    // Coefficient-wise adjoint; dB and dB† swap channels.
    ItoElement adjoint() const;
};

ItoElement operator+(ItoElement a, const ItoElement& b);
ItoElement operator-(ItoElement a, const ItoElement& b);
ItoElement operator*(Complex s, ItoElement a);

// Ito product a·b. Coefficients compose left to right; increments reduce by
//   dB·dB† = dt,  dB·dΛ = dB,  dΛ·dB† = dB†,  dΛ·dΛ = dΛ,
// every other pair (and anything containing dt) vanishes.
ItoElement multiply(const ItoElement& a, const ItoElement& b);

// Largest max-norm across the four channels.
double max_norm(const ItoElement& x);

enum class Increment { dt, dB, dBdag, dLambda };
inline constexpr std::array<Increment, 4> kIncrements = {Increment::dt, Increment::dB,
                                                         Increment::dBdag, Increment::dLambda};
std::string_view name(Increment inc);
const SystemOperator& channel(const ItoElement& x, Increment inc);

// Right-hand side of dU = (drift dτ + gain dB + loss dB† + gauge dΛ) U.
struct QsdeCoefficients {
    SystemOperator drift;
    SystemOperator gain;
    SystemOperator loss;
    SystemOperator gauge;

    static QsdeCoefficients from(const ItoElement& x);
    ItoElement as_element() const;
};

// exp(x) − 1 in canonical four-increment form.
//
// The exponent is scaled by 2^-s until its max-norm is at most 1/2, the
// Taylor series of the scaled exponent is summed with every power reduced by
// `multiply` until the latest term is below `tol` relative to the partial
// sum, and the result is squared back s times through (1+Y)² − 1 = 2Y + Y·Y.
// Throws ConvergenceError if `max_terms` terms are not enough.
QsdeCoefficients ito_exp(const ItoElement& x, double tol = 1e-15, int max_terms = 64);

// −i(χR+ dB + χR- dB† + η·2R3 dΛ): the exponent of the two-level emitter's
// one-step propagator in a vacuum field.
ItoElement emitter_exponent(double chi, double eta);

// Closed forms for ito_exp(emitter_exponent(chi, eta)):
//   drift = χ² (e^{iη} − 1 − iη)/η² · R+R-
//   gain  = −χ (e^{iη} − 1)/η · R+
//   loss  = −χ (e^{iη} − 1)/η · R-
//   gauge = (cos η − 1)·1 − i sin η · 2R3
// The series fixes the sign as e^{+iη}, not e^{−iη}. The η = 0
// limits are taken without division.
QsdeCoefficients coefficient_functions(double chi, double eta);

// Scalar kernels shared by the closed forms and the master equation; all are
// finite and accurate through η = 0.
namespace kernels {

double sinc(double x);                   // sin x / x
double one_minus_cos_over_sq(double eta);  // (1 − cos η)/η²,   → 1/2
double eta_minus_sin_over_sq(double eta);  // (η − sin η)/η²,   → 0
Complex expm1_over(double eta);            // (e^{iη} − 1)/η,   → i
Complex expm1_minus_linear_over_sq(double eta);  // (e^{iη} − 1 − iη)/η², → −1/2

}  // namespace kernels

}  // namespace stark
