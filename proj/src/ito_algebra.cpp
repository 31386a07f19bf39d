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

#include "stark/ito_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stark/errors.hpp"

namespace stark {

namespace {

void require_same_dim(const ItoElement& a, const ItoElement& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(op) + ": operand dimensions differ (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
}

ItoElement single(Eigen::Index dim, Increment inc) {
    ItoElement x = ItoElement::zero(dim);
    const SystemOperator one = SystemOperator::Identity(dim, dim);
    switch (inc) {
        case Increment::dt: x.c_dt = one; break;
        case Increment::dB: x.c_dB = one; break;
        case Increment::dBdag: x.c_dBdag = one; break;
        case Increment::dLambda: x.c_dLambda = one; break;
    }
    return x;
}

}  // namespace

ItoElement ItoElement::zero(Eigen::Index dim) {
    const SystemOperator z = SystemOperator::Zero(dim, dim);
    return {z, z, z, z};
}

ItoElement ItoElement::dt(Eigen::Index dim) { return single(dim, Increment::dt); }
ItoElement ItoElement::dB(Eigen::Index dim) { return single(dim, Increment::dB); }
ItoElement ItoElement::dBdag(Eigen::Index dim) { return single(dim, Increment::dBdag); }
ItoElement ItoElement::dLambda(Eigen::Index dim) { return single(dim, Increment::dLambda); }

ItoElement& ItoElement::operator+=(const ItoElement& other) {
    require_same_dim(*this, other, "add");
    c_dt += other.c_dt;
    c_dB += other.c_dB;
    c_dBdag += other.c_dBdag;
    c_dLambda += other.c_dLambda;
    return *this;
}

ItoElement& ItoElement::operator-=(const ItoElement& other) {
    require_same_dim(*this, other, "subtract");
    c_dt -= other.c_dt;
    c_dB -= other.c_dB;
    c_dBdag -= other.c_dBdag;
    c_dLambda -= other.c_dLambda;
    return *this;
}

ItoElement& ItoElement::operator*=(Complex s) {
    c_dt *= s;
    c_dB *= s;
    c_dBdag *= s;
    c_dLambda *= s;
    return *this;
}

ItoElement ItoElement::adjoint() const {
    // (C dB)† = C† dB†, and dt, dΛ are self-adjoint.
    return {c_dt.adjoint(), c_dBdag.adjoint(), c_dB.adjoint(), c_dLambda.adjoint()};
}

ItoElement operator+(ItoElement a, const ItoElement& b) { return a += b; }
ItoElement operator-(ItoElement a, const ItoElement& b) { return a -= b; }
ItoElement operator*(Complex s, ItoElement a) { return a *= s; }

ItoElement multiply(const ItoElement& a, const ItoElement& b) {
    require_same_dim(a, b, "multiply");
    ItoElement out;
    out.c_dt = a.c_dB * b.c_dBdag;        // dB·dB† = dt
    out.c_dB = a.c_dB * b.c_dLambda;      // dB·dΛ = dB
    out.c_dBdag = a.c_dLambda * b.c_dBdag;  // dΛ·dB† = dB†
    out.c_dLambda = a.c_dLambda * b.c_dLambda;
    return out;
}

double max_norm(const ItoElement& x) {
    return std::max({max_norm(x.c_dt), max_norm(x.c_dB), max_norm(x.c_dBdag),
                     max_norm(x.c_dLambda)});
}

std::string_view name(Increment inc) {
    switch (inc) {
        case Increment::dt: return "dt";
        case Increment::dB: return "dB";
        case Increment::dBdag: return "dBdag";
        case Increment::dLambda: return "dLambda";
    }
    return "?";
}

const SystemOperator& channel(const ItoElement& x, Increment inc) {
    switch (inc) {
        case Increment::dt: return x.c_dt;
        case Increment::dB: return x.c_dB;
        case Increment::dBdag: return x.c_dBdag;
        case Increment::dLambda: break;
    }
    return x.c_dLambda;
}

QsdeCoefficients QsdeCoefficients::from(const ItoElement& x) {
    return {x.c_dt, x.c_dB, x.c_dBdag, x.c_dLambda};
}

ItoElement QsdeCoefficients::as_element() const { return {drift, gain, loss, gauge}; }

QsdeCoefficients ito_exp(const ItoElement& x, double tol, int max_terms) {
    if (!(tol > 0.0)) throw DomainError("ito_exp: tol must be positive");
    if (max_terms < 2) throw DomainError("ito_exp: max_terms must be >= 2");

    int squarings = 0;
    double scale = 1.0;
    const double norm = max_norm(x);
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    const ItoElement y = Complex(scale) * x;

    ItoElement sum = y;
    ItoElement term = y;
    double last = max_norm(term);
    bool converged = last == 0.0;
    for (int n = 2; n <= max_terms && !converged; ++n) {
        term = Complex(1.0 / n) * multiply(term, y);
        sum += term;
        last = max_norm(term);
        converged = last == 0.0 || last <= tol * max_norm(sum);
    }
    if (!converged) {
        throw ConvergenceError("ito_exp: series did not converge within " +
                                   std::to_string(max_terms) +
                                   " terms (last term norm " + std::to_string(last) + ")",
                               last);
    }

    for (int k = 0; k < squarings; ++k) {
        ItoElement sq = multiply(sum, sum);
        sum += sum;
        sum += sq;
    }
    return QsdeCoefficients::from(sum);
}

ItoElement emitter_exponent(double chi, double eta) {
    const Complex minus_i(0.0, -1.0);
    ItoElement x = ItoElement::zero(2);
    x.c_dB = minus_i * chi * su2::raising();
    x.c_dBdag = minus_i * chi * su2::lowering();
    x.c_dLambda = minus_i * eta * su2::stark_operator();
    return x;
}

QsdeCoefficients coefficient_functions(double chi, double eta) {
    const Complex transition = -chi * kernels::expm1_over(eta);
    QsdeCoefficients c;
    c.drift = chi * chi * kernels::expm1_minus_linear_over_sq(eta) * su2::excited_projector();
    c.gain = transition * su2::raising();
    c.loss = transition * su2::lowering();
    c.gauge = (std::cos(eta) - 1.0) * su2::identity() -
              Complex(0.0, std::sin(eta)) * su2::stark_operator();
    return c;
}

namespace kernels {

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0;
    }
    return std::sin(x) / x;
}

double one_minus_cos_over_sq(double eta) {
    const double s = sinc(0.5 * eta);
    return 0.5 * s * s;
}

double eta_minus_sin_over_sq(double eta) {
    if (std::abs(eta) < 1.0) {
        // η/3! − η³/5! + η⁵/7! − ...
        const double eta2 = eta * eta;
        double term = eta / 6.0;
        double sum = term;
        for (int k = 2; k < 12; ++k) {
            term *= -eta2 / ((2.0 * k) * (2.0 * k + 1.0));
            sum += term;
        }
        return sum;
    }
    return (eta - std::sin(eta)) / (eta * eta);
}

Complex expm1_over(double eta) {
    // e^{iη} − 1 = 2i sin(η/2) e^{iη/2}
    return Complex(0.0, 1.0) * std::polar(1.0, 0.5 * eta) * sinc(0.5 * eta);
}

Complex expm1_minus_linear_over_sq(double eta) {
    return {-one_minus_cos_over_sq(eta), -eta_minus_sin_over_sq(eta)};
}

}  // namespace kernels

}  // namespace stark
