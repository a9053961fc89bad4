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

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace onebit
{

/// Value of one `key = value` line: boolean, number, "string", [numbers], ["strings"] or
/// linspace(start, stop, count).
using ConfigValue = std::variant<bool, double, std::string, std::vector<double>, std::vector<std::string>>;

/// Flat key-value file in TOML style. Keys may contain dots; '#' starts a comment.
class ConfigTable
{
  public:
    static ConfigTable parse(const std::string &text);
    static ConfigTable load(const std::string &path);

    bool has(const std::string &key) const { return values_.count(key) != 0; }
    std::vector<std::string> keys() const;

    double number(const std::string &key) const;
    long long integer(const std::string &key) const;
    bool boolean(const std::string &key) const;
    std::string string(const std::string &key) const;
    /// A single number is accepted as a one-element list.
    std::vector<double> numbers(const std::string &key) const;
    std::vector<std::string> strings(const std::string &key) const;

  private:
    const ConfigValue &get(const std::string &key) const;

    std::map<std::string, ConfigValue> values_;
};

} // namespace onebit
