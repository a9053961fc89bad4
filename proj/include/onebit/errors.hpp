// SPDX-License-Identifier: Apache-2.0
//
// onebit-mcrb: performance bounds for estimation from one-bit quantized data
// Copyright (C) 2026 The onebit-mcrb authors
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

namespace onebit
{

// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// A parameter lies outside the domain of its model (e.g. DOA outside (-pi/2, pi/2)).
class ParameterOutOfRange : public Error
{
  public:
    using Error::Error;
};

// Malformed input data (NaN/Inf samples, size mismatches, invalid settings).
class InvalidInput : public Error
{
  public:
    using Error::Error;
};

// Zero or negative noise variance.
class DegenerateNoise : public Error
{
  public:
    using Error::Error;
};

// Sampling rate below 2B for a band-limited noise model.
class UndersamplingError : public Error
{
  public:
    using Error::Error;
};

// The ambiguity function is identically zero (zero signal mean).
class DegenerateMaf : public Error
{
  public:
    using Error::Error;
};

// Estimator input carries no information (all-zero data).
class DegenerateData : public Error
{
  public:
    using Error::Error;
};

// Singular Fisher information or sandwich matrix.
class SingularityError : public Error
{
  public:
    using Error::Error;
};

// Factorization failure, non-finite or negative bound values, failed internal consistency checks.
class NumericalError : public Error
{
  public:
    using Error::Error;
};

// An operation was called with a model it does not support (e.g. AWGN closed form on colored noise).
class MisuseError : public Error
{
  public:
    using Error::Error;
};

// Scenario configuration failed to parse or validate. The message starts with the field path.
class ConfigError : public Error
{
  public:
    ConfigError(const std::string &field, const std::string &what)
        : Error(field + ": " + what), field_(field)
    {
    }
    const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

} // namespace onebit
