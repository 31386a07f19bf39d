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

#include "stark/collision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "stark/errors.hpp"
#include "stark/parallel.hpp"
#include "stark/rng.hpp"

namespace stark {

void CollisionConfig::validate() const {
    if (!std::isfinite(chi) || !std::isfinite(eta)) throw DomainError("collision: chi and eta must be finite");
    if (!(dtau > 0.0)) throw DomainError("collision: dtau must be positive");
    if (n_slices < 1) throw DomainError("collision: n_slices must be >= 1");
    if (fock_cutoff < 1) throw DomainError("collision: fock_cutoff must be >= 1");
}

SystemOperator collision_generator(const CollisionConfig& cfg) {
    cfg.validate();
    const SystemOperator a = annihilation(cfg.fock_cutoff);
    const SystemOperator adag = a.adjoint();
    const double s = cfg.chi * std::sqrt(cfg.dtau);
    return s * kron(su2::raising(), a) + s * kron(su2::lowering(), adag) +
           cfg.eta * kron(su2::stark_operator(), SystemOperator(adag * a));
}

SystemOperator step_unitary(const CollisionConfig& cfg) {
    const SystemOperator g = collision_generator(cfg);
    Eigen::SelfAdjointEigenSolver<SystemOperator> es(g);
    const Eigen::VectorXcd phases =
        (Complex(0.0, -1.0) * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

SystemOperator collide(const SystemOperator& unitary, const SystemOperator& rho, int fock_cutoff) {
    const Eigen::Index n = fock_cutoff + 1;
    SystemOperator vac = SystemOperator::Zero(n, n);
    vac(0, 0) = 1.0;
    const SystemOperator joint = unitary * kron(rho, vac) * unitary.adjoint();
    SystemOperator out = SystemOperator::Zero(rho.rows(), rho.cols());
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        for (Eigen::Index j = 0; j < rho.cols(); ++j)
            for (Eigen::Index k = 0; k < n; ++k) out(i, j) += joint(i * n + k, j * n + k);
    return out;
}

std::vector<DensityMatrix> run_collisions(const CollisionConfig& cfg, const DensityMatrix& rho0) {
    const SystemOperator u = step_unitary(cfg);
    std::vector<DensityMatrix> out;
    out.reserve(static_cast<std::size_t>(cfg.n_slices) + 1);
    out.push_back(rho0);

    SystemOperator rho = rho0.entries();
    for (long k = 1; k <= cfg.n_slices; ++k) {
        rho = collide(u, rho, cfg.fock_cutoff);
        const double drift = std::abs(rho.trace() - 1.0);
        const auto slice = static_cast<std::size_t>(k);
        if (drift > 1e-8) {
            throw IntegrationError("collision trace drift " + std::to_string(drift) +
                                       " at slice " + std::to_string(k),
                                   slice);
        }
        Eigen::SelfAdjointEigenSolver<SystemOperator> es(0.5 * (rho + rho.adjoint()),
                                                         Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        if (lo < -1e-10) {
            throw IntegrationError("collision state lost positivity (eigenvalue " +
                                       std::to_string(lo) + ") at slice " + std::to_string(k),
                                   slice);
        }
        out.emplace_back(rho, 1e-8);
    }
    return out;
}

ConvergenceTable convergence_study(const CollisionConfig& cfg_base, const DensityMatrix& rho0,
                                   int halvings) {
    if (halvings < 2) throw DomainError("convergence_study: halvings must be >= 2");
    cfg_base.validate();
    const LindbladModel model = stark_model(cfg_base.chi, cfg_base.eta);

    ConvergenceTable table;
    table.rows.resize(static_cast<std::size_t>(halvings) + 1);
    parallel_for(table.rows.size(), [&](std::size_t h) {
        CollisionConfig cfg = cfg_base;
        cfg.dtau = cfg_base.dtau / static_cast<double>(1L << h);
        cfg.n_slices = cfg_base.n_slices << h;
        const auto traj = run_collisions(cfg, rho0);

        ConvergenceRow row;
        row.dtau = cfg.dtau;
        row.n_slices = cfg.n_slices;
        for (std::size_t k = 0; k < traj.size(); ++k) {
            const DensityMatrix ref =
                closed_form_evolution(model, rho0, static_cast<double>(k) * cfg.dtau);
            row.err_rho22 = std::max(row.err_rho22, std::abs(traj[k].rho22() - ref.rho22()));
            if (std::abs(ref.rho21()) > 1e-12) {
                const double dphi = std::arg(traj[k].rho21() * std::conj(ref.rho21()));
                row.err_phase = std::max(row.err_phase, std::abs(dphi));
            }
        }
        row.err = std::max(row.err_rho22, row.err_phase);
        table.rows[h] = row;
    });

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t h = 0; h < table.rows.size(); ++h) {
        const auto& r = table.rows[h];
        if (h > 0 && r.err > table.rows[h - 1].err) table.non_monotone = true;
        if (r.err > 0.0) {
            const double x = std::log(r.dtau), y = std::log(r.err);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++n;
        }
    }
    table.exact = n == 0;
    table.order = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx)
                         : std::numeric_limits<double>::quiet_NaN();
    return table;
}

std::uint64_t McResult::total_jumps() const {
    std::uint64_t total = 0;
    for (auto j : jumps) total += j;
    return total;
}

namespace {

constexpr long kTrajectoriesPerBlock = 64;

struct BlockSums {
    std::vector<Eigen::Matrix2cd> rho;
    std::vector<double> p22;
    std::vector<double> p22_sq;
};

}  // namespace

McResult mc_unravel(const LindbladModel& model, const DensityMatrix& rho0, long n_traj,
                    double dtau, long n_slices, std::uint64_t seed, unsigned max_workers) {
    if (n_traj < 1) throw DomainError("mc_unravel: n_traj must be >= 1");
    if (!(dtau > 0.0)) throw DomainError("mc_unravel: dtau must be positive");
    if (n_slices < 0) throw DomainError("mc_unravel: n_slices must be >= 0");
    if (std::abs(rho0.purity() - 1.0) > 1e-10) {
        throw DomainError("mc_unravel: initial state must be pure");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(Eigen::Matrix2cd(rho0.entries()));
    const Eigen::Vector2cd psi0 = es.eigenvectors().col(1);
    // Populations are accumulated relative to the initial one so the sample
    // variance does not suffer from cancellation.
    const double shift = std::norm(psi0(1));

    const Eigen::Matrix2cd jump = std::sqrt(2.0) * Eigen::Matrix2cd(model.jump);
    const Eigen::Matrix2cd l = model.jump;
    const Eigen::Matrix2cd h_eff =
        Eigen::Matrix2cd(model.hamiltonian()) - Complex(0.0, 1.0) * (l.adjoint() * l);
    const Eigen::Matrix2cd no_jump = (Complex(0.0, -dtau) * h_eff).exp();

    // Worst-case norm loss over one slice is the largest jump probability.
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(no_jump);
    const double smin = svd.singularValues().minCoeff();
    const double p_max = 1.0 - smin * smin;
    if (p_max > 0.1) {
        throw TimestepError("mc_unravel: jump probability per slice can reach " +
                            std::to_string(p_max) + " > 0.1; reduce dtau");
    }

    const auto slots = static_cast<std::size_t>(n_slices) + 1;
    const long n_blocks = (n_traj + kTrajectoriesPerBlock - 1) / kTrajectoriesPerBlock;
    std::vector<BlockSums> blocks(static_cast<std::size_t>(n_blocks));
    McResult result;
    result.jumps.assign(static_cast<std::size_t>(n_traj), 0);

    parallel_for(
        blocks.size(),
        [&](std::size_t b) {
            BlockSums& acc = blocks[b];
            acc.rho.assign(slots, Eigen::Matrix2cd::Zero());
            acc.p22.assign(slots, 0.0);
            acc.p22_sq.assign(slots, 0.0);
            const long first = static_cast<long>(b) * kTrajectoriesPerBlock;
            const long last = std::min(n_traj, first + kTrajectoriesPerBlock);
            for (long t = first; t < last; ++t) {
                Stream rng(seed, static_cast<std::uint64_t>(t));
                Eigen::Vector2cd psi = psi0;
                std::uint32_t jumps = 0;
                for (std::size_t k = 0; k < slots; ++k) {
                    if (k > 0) {
                        const Eigen::Vector2cd evolved = no_jump * psi;
                        const double p_jump = 1.0 - evolved.squaredNorm();
                        const Eigen::Vector2cd jumped = jump * psi;
                        if (rng.uniform() < p_jump && jumped.squaredNorm() > 0.0) {
                            psi = jumped.normalized();
                            ++jumps;
                        } else {
                            psi = evolved.normalized();
                        }
                    }
                    acc.rho[k] += psi * psi.adjoint();
                    const double p22 = std::norm(psi(1)) - shift;
                    acc.p22[k] += p22;
                    acc.p22_sq[k] += p22 * p22;
                }
                result.jumps[static_cast<std::size_t>(t)] = jumps;
            }
        },
        max_workers);

    const double n = static_cast<double>(n_traj);
    result.mean.reserve(slots);
    result.rho22_stderr.reserve(slots);
    for (std::size_t k = 0; k < slots; ++k) {
        Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
        double s = 0.0, s2 = 0.0;
        for (const auto& acc : blocks) {
            rho += acc.rho[k];
            s += acc.p22[k];
            s2 += acc.p22_sq[k];
        }
        result.mean.emplace_back(SystemOperator(rho / n), 1e-10);
        const double mean = s / n;  // of the shifted populations
        const double var = n > 1 ? std::max(0.0, (s2 - n * mean * mean) / (n - 1.0)) : 0.0;
        result.rho22_stderr.push_back(std::sqrt(var / n));
    }
    return result;
}

}  // namespace stark
