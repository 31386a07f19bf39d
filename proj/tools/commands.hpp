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
#include <optional>
#include <ostream>
#include <string>

#include "stark/config.hpp"

namespace stark::cli {

// 0 = success with all tolerances met, 1 = usage/config error,
// 2 = tolerance breach, 3 = numerical failure.
enum ExitCode : int { kOk = 0, kUsage = 1, kToleranceBreach = 2, kNumericalFailure = 3 };

inline constexpr const char* kCsvSchema = "stark-csv/1";

struct Invocation {
    std::string command;
    KeyValueConfig config;  // file contents with command-line overrides applied
    std::string out;        // empty: no CSV, no manifest
    std::string version;
};

int cmd_derive(const Invocation& inv, std::ostream& log);
int cmd_simulate(const Invocation& inv, std::ostream& log);
int cmd_sweep(const Invocation& inv, std::ostream& log);
int cmd_map_params(const Invocation& inv, std::ostream& log);

}  // namespace stark::cli
