// SPDX-License-Identifier: Apache-2.0
//
// nfsample - planar near-field sampling and reconstruction
// Copyright (C) 2026 The nfsample authors
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

namespace nfsample
{

enum class ErrorCode
{
    NonPositiveDimension,
    OutOfRange,
    NoRoot,
    NonPositiveStep,
    QuadratureUnderresolved,
    PreconditionViolated,
    SchemeMismatch,
    NonUniformGrid,
    GridMismatch,
    ZeroReference,
    DimensionOverflow,
    FactorizationFailure,
    Config,
    Parse,
    Io
};

// Broad classes, used by the command line front end to pick an exit status.
enum class ErrorClass
{
    Config,
    Numeric,
    Io
};

const char *to_string(ErrorCode code);

inline ErrorClass error_class(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::NonPositiveDimension:
    case ErrorCode::NonPositiveStep:
    case ErrorCode::Config:
    case ErrorCode::SchemeMismatch:
    case ErrorCode::GridMismatch:
        return ErrorClass::Config;
    case ErrorCode::Parse:
    case ErrorCode::Io:
        return ErrorClass::Io;
    default:
        return ErrorClass::Numeric;
    }
}

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace nfsample
