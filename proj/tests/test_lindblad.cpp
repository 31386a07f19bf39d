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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "stark/errors.hpp"
#include "stark/lindblad.hpp"

using namespace stark;
using std::numbers::pi;

TEST_CASE("DensityMatrix validation") {
    CHECK_NOTHROW(DensityMatrix::excited());
    CHECK(DensityMatrix::excited().rho22() == 1.0);
    CHECK(DensityMatrix::ground().rho11() == 1.0);
    CHECK_THROWS_AS(DensityMatrix(SystemOperator::Identity(2, 2)), DomainError);  // trace 2
    CHECK_THROWS_AS(DensityMatrix(SystemOperator::Identity(3, 3) / 3.0), DimensionMismatch);
    CHECK_THROWS_AS(DensityMatrix::from_elements(1.2, 0.0), DomainError);         // negative
    CHECK_THROWS_AS(DensityMatrix::from_elements(0.5, 0.6), DomainError);         // |ρ21|² > ρ11ρ22
    SystemOperator bad = SystemOperator::Identity(2, 2) / 2.0;
    bad(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix{bad}, DomainError);                             // not Hermitian

    const auto rho = DensityMatrix::from_elements(0.25, Complex(0.1, -0.2));
    CHECK(rho.rho21() == Complex(0.1, -0.2));
    CHECK(rho.entries()(1, 0) == Complex(0.1, 0.2));
    CHECK(rho.trace() == doctest::Approx(1.0));
}

TEST_CASE("derive_master_equation examples") {
    SUBCASE("Stark-free decay") {
        const auto m = derive_master_equation(coefficient_functions(1.0, 0.0));
        CHECK(m.gamma == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(m.delta) < 1e-15);
        // 2LρL† normalization: L = R-/√2 carries γ = 1.
        CHECK(max_norm(SystemOperator(m.jump - su2::lowering() / std::sqrt(2.0))) < 1e-15);
    }
    SUBCASE("eta = 2 pi freezes the decay") {
        const auto m = derive_master_equation(coefficient_functions(1.0, 2 * pi));
        CHECK(std::abs(m.gamma) < 1e-15);
        CHECK(m.delta == doctest::Approx(0.159154943091895335768883763373).epsilon(1e-14));
    }
    SUBCASE("no transition channel") {
        const auto m = derive_master_equation(coefficient_functions(0.0, pi));
        CHECK(m.gamma == 0.0);
        CHECK(m.delta == 0.0);
        CHECK(max_norm(m.jump) == 0.0);
    }
    SUBCASE("series coefficients give the same model") {
        const auto a = derive_master_equation(ito_exp(emitter_exponent(1.3, 2.2)));
        const auto b = derive_master_equation(coefficient_functions(1.3, 2.2));
        CHECK(a.gamma == doctest::Approx(b.gamma).epsilon(1e-12));
        CHECK(a.delta == doctest::Approx(b.delta).epsilon(1e-12));
    }
}

TEST_CASE("derive_master_equation rejects foreign structure") {
    auto c = coefficient_functions(1.0, 1.0);
    SUBCASE("drift") {
        c.drift(0, 1) = 0.3;
        CHECK_THROWS_WITH_AS(derive_master_equation(c), doctest::Contains("drift"), StructureError);
    }
    SUBCASE("gain") {
        c.gain(0, 1) = 0.3;
        CHECK_THROWS_WITH_AS(derive_master_equation(c), doctest::Contains("gain"), StructureError);
    }
    SUBCASE("loss") {
        c.loss = su2::raising();
        CHECK_THROWS_WITH_AS(derive_master_equation(c), doctest::Contains("loss"), StructureError);
    }
    SUBCASE("trace leak") {
        c.loss *= 2.0;
        CHECK_THROWS_AS(derive_master_equation(c), StructureError);
    }
    SUBCASE("dimension") {
        c.drift = SystemOperator::Zero(3, 3);
        CHECK_THROWS_AS(derive_master_equation(c), StructureError);
    }
}

TEST_CASE("stark_model rates and jump over a grid") {
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double chi = -2.0 + 4.0 * i / 19.0;
            const double eta = -4 * pi + 8 * pi * j / 19.0;
            const auto m = stark_model(chi, eta);
            const double g = 2 * chi * chi * (1 - std::cos(eta)) / (eta * eta);
            const double d = chi * chi * (eta - std::sin(eta)) / (eta * eta);
            const double l = chi * std::sqrt(1 - std::cos(eta)) / eta;
            CHECK(std::abs(m.gamma - g) <= 1e-12);
            CHECK(std::abs(m.delta - d) <= 1e-12);
            CHECK(max_norm(SystemOperator(m.jump - l * su2::lowering())) <= 1e-12);
            Eigen::JacobiSVD<SystemOperator> svd(m.jump);
            const double s = svd.singularValues()(0);
            CHECK(std::abs(m.gamma - 2 * s * s) <= 1e-12);
        }
    }
    CHECK(stark_model(1.7, 0.0).gamma == doctest::Approx(1.7 * 1.7).epsilon(1e-15));
}

TEST_CASE("generator normal form equals the expanded master equation") {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> uchi(0.0, 2.0), ueta(0.01, 4 * pi);
    for (int k = 0; k < 100; ++k) {
        const double chi = uchi(gen), eta = ueta(gen);
        const SystemOperator rho = oracle::random_density(gen);
        const auto m = stark_model(chi, eta);
        const SystemOperator diff =
            lindblad_rhs(m, rho) - oracle::expanded_master_rhs(chi, eta, rho);
        CHECK(max_norm(diff) <= 1e-12);
        CHECK(m.gamma >= 0.0);
    }
}

TEST_CASE("decay rate equals -2 Re of the drift entry") {
    for (double eta : {-3.0, -0.2, 0.0, 1.0, pi, 10.0}) {
        const auto c = ito_exp(emitter_exponent(1.1, eta));
        const auto m = stark_model(1.1, eta);
        CHECK(std::abs(m.gamma + 2.0 * c.drift(1, 1).real()) < 1e-12);
    }
}

TEST_CASE("suppression_factor") {
    CHECK(suppression_factor(0.0) == 1.0);
    CHECK(suppression_factor(2 * pi) < 1e-15);
    CHECK(suppression_factor(pi) ==
          doctest::Approx(0.405284734569351085775517852839).epsilon(1e-14));
    for (int k = 0; k < 10000; ++k) {
        const double eta = -4 * pi + 8 * pi * k / 9999.0;
        const double s = suppression_factor(eta);
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
        if (eta != 0.0) CHECK(s < 1.0);
    }
    for (double chi : {0.3, 1.0, 1.9}) {
        CHECK(stark_model(chi, 2.0).gamma / stark_model(chi, 0.0).gamma ==
              doctest::Approx(suppression_factor(2.0)).epsilon(1e-14));
    }
}

TEST_CASE("closed_form_evolution examples") {
    const auto decay = rate_model(1.0, 0.0);
    CHECK(closed_form_evolution(decay, DensityMatrix::excited(), std::log(2.0)).rho22() ==
          doctest::Approx(0.5).epsilon(1e-15));

    const auto frozen = stark_model(1.0, 2 * pi);
    for (double tau : {0.0, 1.0, 37.0, 100.0}) {
        CHECK(std::abs(closed_form_evolution(frozen, DensityMatrix::excited(), tau).rho22() - 1.0) <=
              1e-15);
    }

    const auto m = rate_model(0.7, 0.4);
    const auto rho = closed_form_evolution(m, DensityMatrix::from_elements(0.5, 0.5), 1.0);
    CHECK(std::abs(rho.rho21()) == doctest::Approx(std::exp(-0.35) / 2).epsilon(1e-15));
    CHECK(std::arg(rho.rho21()) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK_THROWS_AS(closed_form_evolution(m, rho, -1.0), DomainError);
}

TEST_CASE("excited population is non-increasing") {
    for (double eta : {0.0, 1.0, pi, 2 * pi, 9.0}) {
        const auto m = stark_model(1.0, eta);
        double last = 1.0;
        for (int k = 0; k <= 200; ++k) {
            const double p = closed_form_evolution(m, DensityMatrix::excited(), 0.05 * k).rho22();
            CHECK(p <= last);
            last = p;
        }
    }
}

TEST_CASE("numerical_evolution examples") {
    const auto decay = rate_model(1.0, 0.0);
    const auto traj = numerical_evolution(decay, DensityMatrix::excited(), 1.0, 1000);
    CHECK(traj.size() == 1001);
    CHECK(std::abs(traj.back().rho22() - std::exp(-1.0)) < 1e-9);

    const auto once = numerical_evolution(decay, DensityMatrix::excited(), 0.0, 10);
    CHECK(once.size() == 1);

    const auto m = stark_model(1.0, pi);
    CHECK(m.gamma == doctest::Approx(4 / (pi * pi)).epsilon(1e-14));
    CHECK(m.delta == doctest::Approx(1 / pi).epsilon(1e-14));
    const auto rk = numerical_evolution(m, DensityMatrix::excited(), 1.0, 1000);
    const auto exact = closed_form_evolution(m, DensityMatrix::excited(), 1.0);
    CHECK(std::abs(rk.back().rho22() - exact.rho22()) < 1e-9);

    CHECK_THROWS_AS(numerical_evolution(decay, DensityMatrix::excited(), 1.0, 0), DomainError);
    CHECK_THROWS_AS(numerical_evolution(decay, DensityMatrix::excited(), -1.0, 5), DomainError);
}

TEST_CASE("numerical_evolution reports positivity loss with the step index") {
    // γh = 5 is far outside RK4's stability region for the decay mode.
    const auto m = rate_model(50.0, 0.0);
    try {
        numerical_evolution(m, DensityMatrix::excited(), 1.0, 10);
        FAIL("expected IntegrationError");
    } catch (const IntegrationError& e) {
        CHECK(e.index() == 1);
    }
}

TEST_CASE("RK4 preserves trace and positivity across a parameter grid") {
    std::mt19937_64 gen(23);
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const auto m = stark_model(2.0 * i / 9.0, 4 * pi * j / 9.0);
            const DensityMatrix rho0(oracle::random_density(gen));
            const auto traj = numerical_evolution(m, rho0, 2.0, 200);
            for (const auto& rho : traj) {
                CHECK(std::abs(rho.trace() - 1.0) <= 1e-10);
                CHECK(rho.min_eigenvalue() >= -1e-12);
            }
        }
    }
}

TEST_CASE("derived jump carries the sign of chi/eta") {
    for (double chi : {-1.5, -0.2, 0.7, 2.0}) {
        for (double eta : {-7.0, -1e-9, 0.0, 1e-9, 0.4, 3.0, 12.0}) {
            const auto m = derive_master_equation(ito_exp(emitter_exponent(chi, eta)));
            // √(1 − cos η) = √2 |sin(η/2)| without the cancellation.
            const double want = eta == 0.0 ? chi / std::sqrt(2.0)
                                           : chi * std::sqrt(2.0) * std::abs(std::sin(eta / 2)) / eta;
            CHECK(std::abs(m.jump(0, 1).real() - want) <= 1e-12);
            CHECK(m.jump(0, 1).imag() == 0.0);
        }
    }
}
