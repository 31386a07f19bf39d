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

#include <string>

#include "stark/config.hpp"
#include "stark/errors.hpp"

using namespace stark;

namespace {

std::string error_of(const std::string& text) {
    try {
        KeyValueConfig::parse(text, "t.cfg");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

bool mentions(const std::string& msg, const std::string& what) {
    return msg.find(what) != std::string::npos;
}

const char* kOneQuantum = R"(# toy emitter
stark-config = 1
system.hbar = 1
levels.count = 3
levels.1.freq = 0
levels.1.label = g
levels.2.freq = 1
levels.3.freq = -1
dipole.1.2.re = 1
dipole.2.3.re = 0.5
dipole.2.3.im = -0.25
resonance.kind = one-quantum
resonance.omega21 = 1
resonance.omega_r = 1.05
resonance.coupling = 2
)";

}  // namespace

TEST_CASE("parse basics") {
    const auto cfg = KeyValueConfig::parse("\n# c\nstark-config = 1\n  a.b = 1.5  \nc = x = y\n");
    CHECK(cfg.number("a.b") == 1.5);
    CHECK(cfg.string("c") == "x = y");
    CHECK(cfg.unused_keys().empty());
    CHECK(cfg.contains("a.b"));
    CHECK_FALSE(cfg.contains("stark-config"));
}

TEST_CASE("parse errors carry the location") {
    CHECK(mentions(error_of("a = 1\n"), "t.cfg:1"));
    CHECK(mentions(error_of("a = 1\n"), "stark-config = 1"));
    CHECK(mentions(error_of("# only comments\n"), "missing header"));
    CHECK(mentions(error_of("stark-config = 2\n"), "unsupported config version"));
    CHECK(mentions(error_of("stark-config = 1\nnovalue\n"), "t.cfg:2"));
    CHECK(mentions(error_of("stark-config = 1\nbad key = 1\n"), "invalid key"));
    CHECK(mentions(error_of("stark-config = 1\na = 1\na = 2\n"), "duplicate key 'a'"));
    CHECK(error_of("stark-config = 1\n").empty());
}

TEST_CASE("typed getters") {
    const auto cfg = KeyValueConfig::parse(
        "stark-config = 1\nx = 2.5e-3\nn = -4\nu = 18446744073709551615\nb = true\n"
        "bad = 1.0abc\nnan = nan\ninf = inf\nf = 1.5\nempty =\n");
    CHECK(cfg.number("x") == 2.5e-3);
    CHECK(cfg.integer("n") == -4);
    CHECK(cfg.unsigned64("u") == 18446744073709551615ull);
    CHECK(cfg.boolean("b"));
    CHECK_THROWS_AS(cfg.number("bad"), ConfigError);
    CHECK_THROWS_AS(cfg.number("nan"), ConfigError);
    CHECK_THROWS_AS(cfg.number("inf"), ConfigError);
    CHECK_THROWS_AS(cfg.number("empty"), ConfigError);
    CHECK_THROWS_AS(cfg.integer("f"), ConfigError);
    CHECK_THROWS_AS(cfg.unsigned64("n"), ConfigError);
    CHECK_THROWS_AS(cfg.boolean("x"), ConfigError);
    CHECK(cfg.number_or("missing", 7.0) == 7.0);
    CHECK(cfg.integer_or("missing", 3) == 3);
    CHECK_FALSE(cfg.boolean_or("missing", false));
    try {
        cfg.number("missing");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(mentions(e.what(), "missing key 'missing'"));
    }
}

TEST_CASE("unused keys are reported") {
    const auto cfg = KeyValueConfig::parse("stark-config = 1\nmodel.chi = 1\nmodel.eat = 2\n");
    cfg.number("model.chi");
    CHECK(cfg.unused_keys() == std::vector<std::string>{"model.eat"});
}

TEST_CASE("to_text round trip") {
    KeyValueConfig cfg;
    cfg.set("z", format_double(0.1));
    cfg.set("a", format_double(-1.0 / 3.0));
    const auto text = cfg.to_text();
    CHECK(text.rfind("stark-config = 1\na = ", 0) == 0);
    const auto back = KeyValueConfig::parse(text);
    CHECK(back.number("z") == 0.1);
    CHECK(back.number("a") == -1.0 / 3.0);
    CHECK_THROWS_AS(cfg.set("no spaces", "1"), ConfigError);
}

TEST_CASE("level system and resonance loaders") {
    const auto cfg = KeyValueConfig::parse(kOneQuantum);
    const auto sys = level_system_from(cfg);
    REQUIRE(sys.size() == 3);
    CHECK(sys.levels()[0].label == "g");
    CHECK(sys.levels()[1].label == "E2");
    CHECK(sys.omega(1, 2) == 2.0);
    CHECK(sys.dipoles()(1, 2) == Complex(0.5, -0.25));
    CHECK(sys.dipoles()(2, 1) == Complex(0.5, 0.25));
    CHECK(sys.dipoles()(0, 2) == Complex(0.0));

    const auto spec = resonance_from(cfg);
    CHECK(spec.kind == ResonanceKind::one_quantum);
    CHECK(spec.omega_r == 1.05);
    CHECK(spec.coupling == 2.0);
    CHECK(cfg.unused_keys().empty());

    const auto opts = mapping_options_from(
        KeyValueConfig::parse("stark-config = 1\nmapping.stark_significance = 3\n"));
    CHECK(opts.stark_significance == 3.0);
    CHECK(opts.resonance_tolerance == MappingOptions{}.resonance_tolerance);
}

TEST_CASE("loader errors") {
    const std::string base = kOneQuantum;
    auto without = [&](const std::string& line) {
        std::string s = base;
        s.erase(s.find(line), line.size() + 1);
        return KeyValueConfig::parse(s, "t.cfg");
    };
    try {
        level_system_from(without("levels.3.freq = -1"));
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(mentions(e.what(), "levels.3.freq"));
    }
    try {
        resonance_from(without("resonance.omega21 = 1"));
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(mentions(e.what(), "resonance.omega21"));
    }
    CHECK_THROWS_AS(level_system_from(KeyValueConfig::parse(base + "dipole.2.2.re = 1\n")),
                    ConfigError);
    CHECK_THROWS_AS(level_system_from(KeyValueConfig::parse(base + "dipole.2.1.re = 2\n")),
                    ConfigError);
    CHECK_NOTHROW(level_system_from(KeyValueConfig::parse(base + "dipole.2.1.re = 1\n")));
    CHECK_THROWS_AS(
        resonance_from(KeyValueConfig::parse(
            std::string(base).replace(base.find("one-quantum"), 11, "three-quantum"))),
        ConfigError);
    CHECK_THROWS_AS(level_system_from(KeyValueConfig::parse(
                        std::string(base).replace(base.find("count = 3"), 9, "count = 1"))),
                    ConfigError);
}
