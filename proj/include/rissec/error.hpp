// SPDX-License-Identifier: Apache-2.0
//
// rissec - secrecy and outage analysis for RIS-aided underlay cognitive radio
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace rissec {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument sits exactly on a pole/singularity.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Parameters outside the family a routine is validated for.
class UnsupportedParameters : public Error {
public:
    using Error::Error;
};

/// Configuration record violates an invariant. `field()` names the culprit.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string &what)
        : Error("invalid " + field + ": " + what), field_(std::move(field)) {}
    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A parameter the operation needs was never populated.
class MissingParameter : public Error {
public:
    using Error::Error;
};

/// Numerical failure: overflow, non-convergence, negative square root.
class ComputationError : public Error {
public:
    using Error::Error;
};

/// Malformed configuration text.
class ParseError : public Error {
public:
    ParseError(int line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace rissec
