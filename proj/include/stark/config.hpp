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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stark/physical_params.hpp"

namespace stark {

// Flat key-value configuration.
//
//   stark-config = 1            first non-comment line, exactly this
//   # comment                   full-line comments and blank lines are skipped
//   model.chi = 1.0             key = value; keys are [A-Za-z0-9_.-]+
//
// Values are trimmed; everything after the first '=' belongs to the value.
// Duplicate keys are rejected. Accessors record which keys were read so the
// caller can reject typos via unused_keys().
class KeyValueConfig {
public:
    static constexpr int kVersion = 1;
    static constexpr const char* kHeaderKey = "stark-config";

    KeyValueConfig() = default;
    static KeyValueConfig parse(const std::string& text, const std::string& source = "<string>");
    static KeyValueConfig load(const std::filesystem::path& path);

    bool contains(const std::string& key) const { return values_.count(key) != 0; }
    void set(const std::string& key, const std::string& value);

    std::string string(const std::string& key) const;
    double number(const std::string& key) const;
    long integer(const std::string& key) const;
    std::uint64_t unsigned64(const std::string& key) const;
    bool boolean(const std::string& key) const;

    std::string string_or(const std::string& key, const std::string& fallback) const;
    double number_or(const std::string& key, double fallback) const;
    long integer_or(const std::string& key, long fallback) const;
    std::uint64_t unsigned64_or(const std::string& key, std::uint64_t fallback) const;
    bool boolean_or(const std::string& key, bool fallback) const;

    const std::map<std::string, std::string>& values() const { return values_; }
    std::vector<std::string> unused_keys() const;
    const std::string& source() const { return source_; }

    // Serializes with the header line first and keys in sorted order.
    std::string to_text() const;

private:
    const std::string& raw(const std::string& key) const;

    std::map<std::string, std::string> values_;
    mutable std::set<std::string> used_;
    std::string source_ = "<memory>";
};

// Decimal with 17 significant digits; round-trips every double.
std::string format_double(double v);

// levels.count, levels.N.freq, levels.N.label (optional), dipole.J.K.re/.im,
// system.hbar. Level numbers are 1-based; 1 and 2 are the emitter pair.
LevelSystem level_system_from(const KeyValueConfig& cfg);

// resonance.kind (one-quantum | two-quantum), resonance.omega21,
// resonance.omega_r, resonance.coupling, and for two-quantum
// resonance.omega_c, resonance.delta_omega_c, resonance.g (optional).
ResonanceSpec resonance_from(const KeyValueConfig& cfg);

// mapping.* overrides of MappingOptions.
MappingOptions mapping_options_from(const KeyValueConfig& cfg);

}  // namespace stark
