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

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "stark/collision.hpp"
#include "stark/errors.hpp"
#include "stark/ito_algebra.hpp"
#include "stark/lindblad.hpp"
#include "stark/parallel.hpp"
#include "stark/physical_params.hpp"

namespace stark::cli {

namespace {

// Reads parameters from the invocation config, falls back to defaults and
// records every resolved value for the manifest.
class Resolver {
public:
    explicit Resolver(const Invocation& inv) : in_(inv.config) {}

    double number(const std::string& key, double fallback) {
        const double v = in_.number_or(key, fallback);
        resolved_.set(key, format_double(v));
        return v;
    }
    long integer(const std::string& key, long fallback) {
        const long v = in_.integer_or(key, fallback);
        resolved_.set(key, std::to_string(v));
        return v;
    }
    std::uint64_t unsigned64(const std::string& key, std::uint64_t fallback) {
        const std::uint64_t v = in_.unsigned64_or(key, fallback);
        resolved_.set(key, std::to_string(v));
        return v;
    }
    bool boolean(const std::string& key, bool fallback) {
        const bool v = in_.boolean_or(key, fallback);
        resolved_.set(key, v ? "true" : "false");
        return v;
    }
    // Copies every key under the given prefixes verbatim (structured inputs
    // such as level systems are validated by their own loaders).
    void copy_prefixed(std::initializer_list<const char*> prefixes) {
        for (const auto& [k, v] : in_.values())
            for (const char* p : prefixes)
                if (k.rfind(p, 0) == 0) resolved_.set(k, v);
    }

    // Rejects keys nobody asked for. Manifest metadata is ignored, except
    // that a manifest from a different command is refused.
    void finish(const std::string& command) const {
        if (in_.contains("manifest.command") && in_.string("manifest.command") != command) {
            throw ConfigError(in_.source() + ": manifest was written by '" +
                              in_.string("manifest.command") + "', not '" + command + "'");
        }
        for (const auto& key : in_.unused_keys()) {
            if (key.rfind("manifest.", 0) == 0) continue;
            if (resolved_.contains(key)) continue;
            throw ConfigError(in_.source() + ": unknown key '" + key + "' for command '" +
                              command + "'");
        }
    }

    const KeyValueConfig& input() const { return in_; }
    const KeyValueConfig& resolved() const { return resolved_; }

private:
    const KeyValueConfig& in_;
    KeyValueConfig resolved_;
};

void write_manifest(const Invocation& inv, const Resolver& r) {
    if (inv.out.empty()) return;
    KeyValueConfig m = r.resolved();
    m.set("manifest.command", inv.command);
    m.set("manifest.version", inv.version);
    m.set("manifest.out", inv.out);
    std::ofstream f(inv.out + ".manifest");
    if (!f) throw ConfigError("cannot write manifest '" + inv.out + ".manifest'");
    f << m.to_text();
}

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& kind,
              const std::vector<std::string>& columns)
        : f_(path) {
        if (!f_) throw ConfigError("cannot write output '" + path + "'");
        f_ << "# " << kCsvSchema << " kind=" << kind << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i) f_ << (i ? "," : "") << columns[i];
        f_ << "\n";
    }
    void row(const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i)
            f_ << (i ? "," : "") << format_double(values[i]);
        f_ << "\n";
    }

private:
    std::ofstream f_;
};

std::string fmt(double v) { return format_double(v); }
std::string fmt(Complex z) {
    std::ostringstream os;
    os << format_double(z.real()) << (z.imag() < 0 ? " - " : " + ")
       << format_double(std::abs(z.imag())) << "i";
    return os.str();
}

}  // namespace

int cmd_derive(const Invocation& inv, std::ostream& log) {
    Resolver r(inv);
    const double chi = r.number("model.chi", 1.0);
    const double eta = r.number("model.eta", 0.0);
    const double series_tol = r.number("series.tol", 1e-15);
    const long max_terms = r.integer("series.max_terms", 64);
    const double residual_tol = r.number("check.residual_tol", 1e-12);
    r.finish(inv.command);

    const QsdeCoefficients closed = coefficient_functions(chi, eta);
    const QsdeCoefficients series =
        ito_exp(emitter_exponent(chi, eta), series_tol, static_cast<int>(max_terms));
    const double residual = max_norm(series.as_element() - closed.as_element());
    const LindbladModel model = stark_model(chi, eta);
    const double s = suppression_factor(eta);

    const Complex drift = closed.drift(1, 1), gain = closed.gain(1, 0), loss = closed.loss(0, 1);
    const Complex gauge1 = closed.gauge(0, 0), gauge2 = closed.gauge(1, 1);
    log << "QSDE coefficients, chi = " << fmt(chi) << ", eta = " << fmt(eta) << "\n"
        << "  drift  (dtau)    " << fmt(drift) << " * R+R-\n"
        << "  gain   (dB)      " << fmt(gain) << " * R+\n"
        << "  loss   (dB+)     " << fmt(loss) << " * R-\n"
        << "  gauge  (dLambda) diag(" << fmt(gauge1) << ", " << fmt(gauge2) << ")\n"
        << "Master equation\n"
        << "  gamma            " << fmt(model.gamma) << "\n"
        << "  delta            " << fmt(model.delta) << "\n"
        << "  L                " << fmt(model.jump(0, 1).real()) << " * R-\n"
        << "  S(eta)           " << fmt(s) << "\n"
        << "  series residual  " << fmt(residual) << "\n";

    if (!inv.out.empty()) {
        CsvWriter csv(inv.out, "derive",
                      {"chi", "eta", "drift_re", "drift_im", "gain_re", "gain_im", "loss_re",
                       "loss_im", "gauge_e1_re", "gauge_e1_im", "gauge_e2_re", "gauge_e2_im",
                       "gamma", "delta", "jump", "suppression", "residual"});
        csv.row({chi, eta, drift.real(), drift.imag(), gain.real(), gain.imag(), loss.real(),
                 loss.imag(), gauge1.real(), gauge1.imag(), gauge2.real(), gauge2.imag(),
                 model.gamma, model.delta, model.jump(0, 1).real(), s, residual});
        write_manifest(inv, r);
    }
    if (residual > residual_tol) {
        log << "FAIL series residual " << fmt(residual) << " exceeds " << fmt(residual_tol)
            << "\n";
        return kToleranceBreach;
    }
    return kOk;
}

int cmd_sweep(const Invocation& inv, std::ostream& log) {
    Resolver r(inv);
    const double chi = r.number("model.chi", 1.0);
    const double eta_min = r.number("sweep.eta_min", -4.0 * std::numbers::pi);
    const double eta_max = r.number("sweep.eta_max", 4.0 * std::numbers::pi);
    const long points = r.integer("sweep.points", 401);
    const double residual_tol = r.number("check.residual_tol", 1e-12);
    r.finish(inv.command);
    if (points < 2) throw ConfigError("sweep.points must be >= 2");
    if (!(eta_max > eta_min)) throw ConfigError("sweep.eta_max must exceed sweep.eta_min");

    struct Row {
        double eta, gamma, delta, s, residual;
    };
    std::vector<Row> rows(static_cast<std::size_t>(points));
    parallel_for(rows.size(), [&](std::size_t i) {
        const double eta =
            i + 1 == rows.size()
                ? eta_max
                : eta_min + (eta_max - eta_min) * static_cast<double>(i) / (points - 1);
        const LindbladModel m = stark_model(chi, eta);
        const double residual = max_norm(ito_exp(emitter_exponent(chi, eta)).as_element() -
                                         coefficient_functions(chi, eta).as_element());
        rows[i] = {eta, m.gamma, m.delta, suppression_factor(eta), residual};
    });

    double worst = 0.0;
    for (const auto& row : rows) worst = std::max(worst, row.residual);
    if (!inv.out.empty()) {
        CsvWriter csv(inv.out, "sweep", {"eta", "gamma", "delta", "suppression", "residual"});
        for (const auto& row : rows) csv.row({row.eta, row.gamma, row.delta, row.s, row.residual});
        write_manifest(inv, r);
    }
    log << "sweep: " << points << " points, eta in [" << fmt(eta_min) << ", " << fmt(eta_max)
        << "], chi = " << fmt(chi) << ", max series residual " << fmt(worst) << "\n";
    if (worst > residual_tol) {
        log << "FAIL series residual exceeds " << fmt(residual_tol) << "\n";
        return kToleranceBreach;
    }
    return kOk;
}

int cmd_simulate(const Invocation& inv, std::ostream& log) {
    Resolver r(inv);
    const double chi = r.number("model.chi", 1.0);
    const double eta = r.number("model.eta", 0.0);
    const double rho22 = r.number("initial.rho22", 1.0);
    const double rho21_re = r.number("initial.rho21.re", 0.0);
    const double rho21_im = r.number("initial.rho21.im", 0.0);
    const double tau_end = r.number("time.tau_end", 1.0);
    const long samples = r.integer("time.samples", 100);
    const long rk4_substeps = r.integer("rk4.substeps", 10);
    const long coll_substeps = r.integer("collision.substeps", 10);
    const long fock_cutoff = r.integer("collision.fock_cutoff", 1);
    const bool mc_enabled = r.boolean("mc.enabled", false);
    const long mc_traj = r.integer("mc.trajectories", 1000);
    const long mc_substeps = r.integer("mc.substeps", 10);
    const std::uint64_t seed = r.unsigned64("mc.seed", 0);
    const double tol_rk4 = r.number("tol.rk4", 1e-8);
    const double tol_coll = r.number("tol.collision", 1e-3);
    const double tol_mc = r.number("tol.mc_sigma", 4.0);
    r.finish(inv.command);

    if (!(tau_end > 0.0)) throw ConfigError("time.tau_end must be positive");
    if (samples < 1 || rk4_substeps < 1 || coll_substeps < 1 || mc_substeps < 1) {
        throw ConfigError("time.samples and *.substeps must be >= 1");
    }
    if (mc_enabled && mc_traj < 1) throw ConfigError("mc.trajectories must be >= 1");
    const DensityMatrix rho0 = [&] {
        try {
            return DensityMatrix::from_elements(rho22, {rho21_re, rho21_im});
        } catch (const DomainError& e) {
            throw ConfigError(std::string("initial state: ") + e.what());
        }
    }();

    const LindbladModel model = stark_model(chi, eta);
    const auto n = static_cast<std::size_t>(samples);
    const double h = tau_end / static_cast<double>(samples);

    std::vector<DensityMatrix> closed;
    for (std::size_t i = 0; i <= n; ++i)
        closed.push_back(closed_form_evolution(model, rho0, static_cast<double>(i) * h));
    const auto rk4 = numerical_evolution(model, rho0, tau_end, static_cast<int>(samples * rk4_substeps));

    CollisionConfig cc;
    cc.chi = chi;
    cc.eta = eta;
    cc.dtau = h / static_cast<double>(coll_substeps);
    cc.n_slices = samples * coll_substeps;
    cc.fock_cutoff = static_cast<int>(fock_cutoff);
    cc.rng_seed = seed;
    const auto coll = run_collisions(cc, rho0);

    std::optional<McResult> mc;
    if (mc_enabled) {
        mc = mc_unravel(model, rho0, mc_traj, h / static_cast<double>(mc_substeps),
                        samples * mc_substeps, seed);
    }

    double res_rk4 = 0.0, res_coll = 0.0, res_mc = 0.0;
    std::vector<std::string> cols = {"tau"};
    for (const char* m : {"closed", "rk4", "collision"})
        for (const char* c : {"rho11", "rho22", "re_rho21", "im_rho21"})
            cols.push_back(std::string(m) + "." + c);
    if (mc) {
        for (const char* c : {"rho11", "rho22", "re_rho21", "im_rho21", "rho22_stderr"})
            cols.push_back(std::string("mc.") + c);
    }
    std::optional<CsvWriter> csv;
    if (!inv.out.empty()) csv.emplace(inv.out, "simulate", cols);

    auto push = [](std::vector<double>& row, const DensityMatrix& d) {
        row.push_back(d.rho11());
        row.push_back(d.rho22());
        row.push_back(d.rho21().real());
        row.push_back(d.rho21().imag());
    };
    for (std::size_t i = 0; i <= n; ++i) {
        const DensityMatrix& a = rk4[i * static_cast<std::size_t>(rk4_substeps)];
        const DensityMatrix& b = coll[i * static_cast<std::size_t>(coll_substeps)];
        res_rk4 = std::max(res_rk4, max_norm(SystemOperator(a.entries() - closed[i].entries())));
        res_coll = std::max(res_coll, max_norm(SystemOperator(b.entries() - closed[i].entries())));
        std::vector<double> row = {static_cast<double>(i) * h};
        push(row, closed[i]);
        push(row, a);
        push(row, b);
        if (mc) {
            const std::size_t k = i * static_cast<std::size_t>(mc_substeps);
            const DensityMatrix& m = mc->mean[k];
            const double se = mc->rho22_stderr[k];
            const double dev = std::abs(m.rho22() - closed[i].rho22());
            res_mc = std::max(res_mc, se > 0.0 ? dev / se : (dev > 1e-12 ? INFINITY : 0.0));
            push(row, m);
            row.push_back(se);
        }
        if (csv) csv->row(row);
    }
    if (csv) write_manifest(inv, r);

    bool ok = true;
    auto report = [&](const char* name, double value, double tol, const char* unit) {
        const bool pass = value <= tol;
        ok = ok && pass;
        log << (pass ? "ok   " : "FAIL ") << name << " residual " << fmt(value) << unit
            << " (tolerance " << fmt(tol) << unit << ")\n";
    };
    log << "simulate: chi = " << fmt(chi) << ", eta = " << fmt(eta) << ", gamma = "
        << fmt(model.gamma) << ", delta = " << fmt(model.delta) << "\n";
    report("rk4      ", res_rk4, tol_rk4, "");
    report("collision", res_coll, tol_coll, "");
    if (mc) report("mc rho22 ", res_mc, tol_mc, " sigma");
    return ok ? kOk : kToleranceBreach;
}

int cmd_map_params(const Invocation& inv, std::ostream& log) {
    Resolver r(inv);
    r.copy_prefixed({"levels.", "dipole.", "system.", "resonance."});
    const LevelSystem system = level_system_from(r.input());
    const ResonanceSpec spec = resonance_from(r.input());
    MappingOptions o;
    o.resonance_guard_rel = r.number("mapping.resonance_guard_rel", o.resonance_guard_rel);
    o.resonance_tolerance = r.number("mapping.resonance_tolerance", o.resonance_tolerance);
    o.cavity_width_ratio_max = r.number("mapping.cavity_width_ratio_max", o.cavity_width_ratio_max);
    o.stark_significance = r.number("mapping.stark_significance", o.stark_significance);
    o.eta_order_unity = r.number("mapping.eta_order_unity", o.eta_order_unity);
    r.finish(inv.command);

    const MappedParameters p = map_parameters(spec, system, o);
    const bool one = spec.kind == ResonanceKind::one_quantum;
    log << (one ? "one-quantum" : "two-quantum") << " resonance\n"
        << "  chi   " << fmt(p.chi) << "\n"
        << "  eta   " << fmt(p.eta) << "\n"
        << (one ? "  significance ratio |Pi2 - Pi1| / (2 d12^2 / (hbar omega21))  "
                : "  eta/chi  ")
        << fmt(p.ratio) << "\n"
        << "  stark_significant  " << (p.stark_significant ? "yes" : "no") << "\n"
        << "  eta_order_unity    " << (p.eta_order_unity ? "yes" : "no") << "\n";
    if (!inv.out.empty()) {
        CsvWriter csv(inv.out, "map-params",
                      {"two_quantum", "chi", "eta", "ratio", "stark_significant",
                       "eta_order_unity"});
        csv.row({one ? 0.0 : 1.0, p.chi, p.eta, p.ratio, p.stark_significant ? 1.0 : 0.0,
                 p.eta_order_unity ? 1.0 : 0.0});
        write_manifest(inv, r);
    }
    return kOk;
}

}  // namespace stark::cli
