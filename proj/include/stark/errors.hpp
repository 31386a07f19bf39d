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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stark {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so new failure modes should derive from the closest category.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller handed in something malformed: mismatched dimensions, bad ranges,
// invalid states, missing configuration keys.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DomainError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// QSDE coefficients that do not have the drift ∝ R+R-, gain ∝ R+,
// loss ∝ R- pattern.
class StructureError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class ConfigError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Physical-parameter mapping failures (near-resonant denominators,
// forbidden transitions, vanishing two-photon element).
class ParameterError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Numerical failures during a computation that started from valid input.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double last_term_norm)
        : NumericalError(what), last_term_norm_(last_term_norm) {}
    double last_term_norm() const noexcept { return last_term_norm_; }

private:
    double last_term_norm_;
};

// A trajectory left the set of valid density matrices. `index` is the
// integration step or collision slice at which it was detected.
class IntegrationError : public NumericalError {
public:
    IntegrationError(const std::string& what, std::size_t index)
        : NumericalError(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class TimestepError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace stark
