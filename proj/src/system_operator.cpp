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

#include "stark/system_operator.hpp"

#include <cmath>
#include "stark/errors.hpp"

namespace stark {

namespace su2 {

SystemOperator identity() { return SystemOperator::Identity(2, 2); }

SystemOperator ground_projector() {
    SystemOperator m = SystemOperator::Zero(2, 2);
    m(0, 0) = 1.0;
    return m;
}

SystemOperator excited_projector() {
    SystemOperator m = SystemOperator::Zero(2, 2);
    m(1, 1) = 1.0;
    return m;
}

SystemOperator raising() {
    SystemOperator m = SystemOperator::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

SystemOperator lowering() {
    SystemOperator m = SystemOperator::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

SystemOperator r3() { return 0.5 * (excited_projector() - ground_projector()); }

SystemOperator stark_operator() { return 2.0 * r3(); }

}  // namespace su2

double max_norm(const SystemOperator& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

SystemOperator kron(const SystemOperator& a, const SystemOperator& b) {
    SystemOperator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

SystemOperator annihilation(int cutoff) {
    if (cutoff < 1) throw DomainError("fock cutoff must be >= 1");
    const int n = cutoff + 1;
    SystemOperator a = SystemOperator::Zero(n, n);
    for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

}  // namespace stark
