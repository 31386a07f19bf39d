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

#include "stark/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "stark/errors.hpp"

namespace stark {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool valid_key(const std::string& key) {
    return !key.empty() && std::all_of(key.begin(), key.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '.' || c == '-';
    });
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(const std::string& text, const std::string& source) {
    KeyValueConfig cfg;
    cfg.source_ = source;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        const std::string where = source + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (!valid_key(key)) throw ConfigError(where + ": invalid key '" + key + "'");
        if (!header_seen) {
            if (key != kHeaderKey) {
                throw ConfigError(where + ": first entry must be '" + kHeaderKey + " = " +
                                  std::to_string(kVersion) + "'");
            }
            if (value != std::to_string(kVersion)) {
                throw ConfigError(where + ": unsupported config version '" + value + "'");
            }
            header_seen = true;
            continue;
        }
        if (cfg.values_.count(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
        cfg.values_.emplace(key, value);
    }
    if (!header_seen) {
        throw ConfigError(source + ": missing header '" + kHeaderKey + " = " +
                          std::to_string(kVersion) + "'");
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
    if (!valid_key(key)) throw ConfigError("invalid key '" + key + "'");
    values_[key] = value;
}

const std::string& KeyValueConfig::raw(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(source_ + ": missing key '" + key + "'");
    used_.insert(key);
    return it->second;
}

std::string KeyValueConfig::string(const std::string& key) const { return raw(key); }

double KeyValueConfig::number(const std::string& key) const {
    const std::string& v = raw(key);
    // strtod also accepts "inf" and "nan"; those are rejected here.
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(d)) {
        throw ConfigError(source_ + ": key '" + key + "' is not a finite number: '" + v + "'");
    }
    return d;
}

long KeyValueConfig::integer(const std::string& key) const {
    const std::string& v = raw(key);
    long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ConfigError(source_ + ": key '" + key + "' is not an integer: '" + v + "'");
    }
    return out;
}

std::uint64_t KeyValueConfig::unsigned64(const std::string& key) const {
    const std::string& v = raw(key);
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ConfigError(source_ + ": key '" + key + "' is not an unsigned 64-bit integer: '" +
                          v + "'");
    }
    return out;
}

bool KeyValueConfig::boolean(const std::string& key) const {
    const std::string& v = raw(key);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError(source_ + ": key '" + key + "' is not a boolean: '" + v + "'");
}

std::string KeyValueConfig::string_or(const std::string& key, const std::string& fallback) const {
    return contains(key) ? string(key) : fallback;
}
double KeyValueConfig::number_or(const std::string& key, double fallback) const {
    return contains(key) ? number(key) : fallback;
}
long KeyValueConfig::integer_or(const std::string& key, long fallback) const {
    return contains(key) ? integer(key) : fallback;
}
std::uint64_t KeyValueConfig::unsigned64_or(const std::string& key, std::uint64_t fallback) const {
    return contains(key) ? unsigned64(key) : fallback;
}
bool KeyValueConfig::boolean_or(const std::string& key, bool fallback) const {
    return contains(key) ? boolean(key) : fallback;
}

std::vector<std::string> KeyValueConfig::unused_keys() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : values_)
        if (!used_.count(k)) out.push_back(k);
    return out;
}

std::string KeyValueConfig::to_text() const {
    std::string out = std::string(kHeaderKey) + " = " + std::to_string(kVersion) + "\n";
    for (const auto& [k, v] : values_) out += k + " = " + v + "\n";
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

LevelSystem level_system_from(const KeyValueConfig& cfg) {
    const long count = cfg.integer("levels.count");
    if (count < 2) throw ConfigError(cfg.source() + ": levels.count must be >= 2");
    std::vector<Level> levels;
    for (long k = 1; k <= count; ++k) {
        const std::string prefix = "levels." + std::to_string(k);
        levels.push_back({cfg.string_or(prefix + ".label", "E" + std::to_string(k)),
                          cfg.number(prefix + ".freq")});
    }

    SystemOperator d = SystemOperator::Zero(count, count);
    Eigen::MatrixXi given = Eigen::MatrixXi::Zero(count, count);
    for (long j = 1; j <= count; ++j) {
        for (long k = 1; k <= count; ++k) {
            const std::string prefix = "dipole." + std::to_string(j) + "." + std::to_string(k);
            const bool has_re = cfg.contains(prefix + ".re");
            const bool has_im = cfg.contains(prefix + ".im");
            if (!has_re && !has_im) continue;
            if (j == k) throw ConfigError(cfg.source() + ": diagonal dipole '" + prefix + "'");
            const Complex value(cfg.number_or(prefix + ".re", 0.0),
                                cfg.number_or(prefix + ".im", 0.0));
            if (given(k - 1, j - 1) && std::abs(d(j - 1, k - 1) - value) > 0.0) {
                throw ConfigError(cfg.source() + ": " + prefix +
                                  " contradicts the conjugate of its transpose entry");
            }
            d(j - 1, k - 1) = value;
            d(k - 1, j - 1) = std::conj(value);
            given(j - 1, k - 1) = 1;
        }
    }
    return LevelSystem(std::move(levels), std::move(d), cfg.number("system.hbar"));
}

ResonanceSpec resonance_from(const KeyValueConfig& cfg) {
    ResonanceSpec spec;
    const std::string kind = cfg.string("resonance.kind");
    if (kind == "one-quantum") {
        spec.kind = ResonanceKind::one_quantum;
    } else if (kind == "two-quantum") {
        spec.kind = ResonanceKind::two_quantum;
    } else {
        throw ConfigError(cfg.source() + ": resonance.kind must be one-quantum or two-quantum");
    }
    spec.omega21 = cfg.number("resonance.omega21");
    spec.omega_r = cfg.number("resonance.omega_r");
    spec.coupling = cfg.number("resonance.coupling");
    if (spec.kind == ResonanceKind::two_quantum) {
        spec.omega_c = cfg.number("resonance.omega_c");
        spec.delta_omega_c = cfg.number("resonance.delta_omega_c");
        spec.g = cfg.number_or("resonance.g", 0.0);
    }
    return spec;
}

MappingOptions mapping_options_from(const KeyValueConfig& cfg) {
    MappingOptions o;
    o.resonance_guard_rel = cfg.number_or("mapping.resonance_guard_rel", o.resonance_guard_rel);
    o.resonance_tolerance = cfg.number_or("mapping.resonance_tolerance", o.resonance_tolerance);
    o.cavity_width_ratio_max =
        cfg.number_or("mapping.cavity_width_ratio_max", o.cavity_width_ratio_max);
    o.stark_significance = cfg.number_or("mapping.stark_significance", o.stark_significance);
    o.eta_order_unity = cfg.number_or("mapping.eta_order_unity", o.eta_order_unity);
    return o;
}

}  // namespace stark
