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

#include "onebit/config.hpp"

#include "onebit/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace onebit
{

namespace
{

std::string trim(const std::string &s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string strip_comment(const std::string &line)
{
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        if (line[i] == '"')
            quoted = !quoted;
        else if (line[i] == '#' && !quoted)
            return line.substr(0, i);
    }
    return line;
}

bool parse_number(const std::string &text, double &out)
{
    const std::string t = trim(text);
    if (t.empty())
        return false;
    const char *begin = t.data();
    const char *end = t.data() + t.size();
    if (*begin == '+')
        ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

std::vector<std::string> split_items(const std::string &body)
{
    std::vector<std::string> items;
    std::string cur;
    bool quoted = false;
    for (char c : body)
    {
        if (c == '"')
            quoted = !quoted;
        if (c == ',' && !quoted)
        {
            items.push_back(trim(cur));
            cur.clear();
        }
        else
            cur += c;
    }
    if (!trim(cur).empty() || !items.empty())
        items.push_back(trim(cur));
    return items;
}

bool is_quoted(const std::string &s)
{
    return s.size() >= 2 && s.front() == '"' && s.back() == '"';
}

ConfigValue parse_value(const std::string &key, const std::string &raw)
{
    const std::string v = trim(raw);
    if (v.empty())
        throw ConfigError(key, "missing value");
    if (v == "true" || v == "false")
        return v == "true";
    if (is_quoted(v))
    {
        const std::string inner = v.substr(1, v.size() - 2);
        if (inner.find('"') != std::string::npos)
            throw ConfigError(key, "embedded quotes are not supported");
        return inner;
    }
    if (v.rfind("linspace(", 0) == 0 && v.back() == ')')
    {
        const auto args = split_items(v.substr(9, v.size() - 10));
        double a = 0, b = 0, n = 0;
        if (args.size() != 3 || !parse_number(args[0], a) || !parse_number(args[1], b) || !parse_number(args[2], n) ||
            n < 1 || n != std::floor(n))
            throw ConfigError(key, "linspace expects (start, stop, count) with a positive integer count");
        const auto count = static_cast<std::size_t>(n);
        std::vector<double> out(count);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = count == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
        if (count > 1)
            out.back() = b;
        return out;
    }
    if (v.front() == '[')
    {
        if (v.back() != ']')
            throw ConfigError(key, "unterminated list");
        const auto items = split_items(v.substr(1, v.size() - 2));
        if (items.empty())
            return std::vector<double>{};
        if (is_quoted(items.front()))
        {
            std::vector<std::string> out;
            for (const auto &it : items)
            {
                if (!is_quoted(it))
                    throw ConfigError(key, "mixed list element types");
                out.push_back(it.substr(1, it.size() - 2));
            }
            return out;
        }
        std::vector<double> out;
        for (const auto &it : items)
        {
            double x = 0;
            if (!parse_number(it, x))
                throw ConfigError(key, "'" + it + "' is not a number");
            out.push_back(x);
        }
        return out;
    }
    double x = 0;
    if (parse_number(v, x))
        return x;
    throw ConfigError(key, "cannot parse value '" + v + "'");
}

} // namespace

ConfigTable ConfigTable::parse(const std::string &text)
{
    ConfigTable table;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        const std::string body = trim(strip_comment(line));
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno), "empty key");
        for (char c : key)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'))
                throw ConfigError(key, "invalid character in key");
        if (table.values_.count(key))
            throw ConfigError(key, "duplicate key");
        table.values_[key] = parse_value(key, body.substr(eq + 1));
    }
    return table;
}

ConfigTable ConfigTable::load(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError(path, "cannot open file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

std::vector<std::string> ConfigTable::keys() const
{
    std::vector<std::string> out;
    for (const auto &kv : values_)
        out.push_back(kv.first);
    return out;
}

const ConfigValue &ConfigTable::get(const std::string &key) const
{
    auto it = values_.find(key);
    if (it == values_.end())
        throw ConfigError(key, "missing");
    return it->second;
}

double ConfigTable::number(const std::string &key) const
{
    if (const auto *d = std::get_if<double>(&get(key)))
        return *d;
    throw ConfigError(key, "expected a number");
}

long long ConfigTable::integer(const std::string &key) const
{
    const double d = number(key);
    if (d != std::floor(d) || std::abs(d) > 9.0e15)
        throw ConfigError(key, "expected an integer");
    return static_cast<long long>(d);
}

bool ConfigTable::boolean(const std::string &key) const
{
    if (const auto *b = std::get_if<bool>(&get(key)))
        return *b;
    throw ConfigError(key, "expected true or false");
}

std::string ConfigTable::string(const std::string &key) const
{
    if (const auto *s = std::get_if<std::string>(&get(key)))
        return *s;
    throw ConfigError(key, "expected a quoted string");
}

std::vector<double> ConfigTable::numbers(const std::string &key) const
{
    const ConfigValue &v = get(key);
    if (const auto *d = std::get_if<double>(&v))
        return {*d};
    if (const auto *l = std::get_if<std::vector<double>>(&v))
        return *l;
    throw ConfigError(key, "expected a number or a list of numbers");
}

std::vector<std::string> ConfigTable::strings(const std::string &key) const
{
    const ConfigValue &v = get(key);
    if (const auto *s = std::get_if<std::string>(&v))
        return {*s};
    if (const auto *l = std::get_if<std::vector<std::string>>(&v))
        return *l;
    if (const auto *l = std::get_if<std::vector<double>>(&v); l && l->empty())
        return {};
    throw ConfigError(key, "expected a string or a list of strings");
}

} // namespace onebit
