// Copyright 2026 The nmwitness Authors
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

#include "nmw/rate.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "nmw/errors.hpp"

namespace nmw {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

bool parse_double(const std::string& text, double& out) {
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

RateFunction RateFunction::constant(double value) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return RateFunction(Kind::Parametric, [value](double) { return value; }, buf);
}

RateFunction RateFunction::parametric(std::function<double(double)> fn, std::string description) {
    return RateFunction(Kind::Parametric, std::move(fn), std::move(description));
}

RateFunction RateFunction::expression(RateExpression expr) {
    std::string desc = expr.source();
    return RateFunction(Kind::Expression, [e = std::move(expr)](double t) { return e(t); },
                        std::move(desc));
}

RateFunction RateFunction::table(std::vector<double> times, std::vector<double> values,
                                 std::string description) {
    if (times.empty() || times.size() != values.size())
        throw ConfigError("rate table: need equal, non-zero numbers of times and values");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw ConfigError("rate table: times must be strictly increasing (row " + std::to_string(i + 1) +
                              ")");
    auto data = std::make_shared<const std::pair<std::vector<double>, std::vector<double>>>(
        std::move(times), std::move(values));
    auto fn = [data](double t) {
        const auto& [ts, vs] = *data;
        if (t <= ts.front()) return vs.front();
        if (t >= ts.back()) return vs.back();
        const auto hi = static_cast<std::size_t>(std::upper_bound(ts.begin(), ts.end(), t) - ts.begin());
        const std::size_t lo = hi - 1;
        const double w = (t - ts[lo]) / (ts[hi] - ts[lo]);
        return vs[lo] + w * (vs[hi] - vs[lo]);
    };
    return RateFunction(Kind::Table, std::move(fn), std::move(description));
}

RateFunction read_rate_table(std::istream& in, const std::string& name) {
    std::vector<double> ts, vs;
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const auto comma = text.find(',');
        double t = 0.0, v = 0.0;
        if (comma == std::string::npos || !parse_double(trim(text.substr(0, comma)), t) ||
            !parse_double(trim(text.substr(comma + 1)), v)) {
            throw ConfigError(name + ":" + std::to_string(lineno) + ": expected 't,rate' numeric row");
        }
        ts.push_back(t);
        vs.push_back(v);
    }
    if (!header_seen) throw ConfigError(name + ": missing header row");
    if (ts.empty()) throw ConfigError(name + ": no data rows");
    return RateFunction::table(std::move(ts), std::move(vs), "@" + name);
}

RateFunction load_rate_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open rate table '" + path + "'");
    return read_rate_table(in, path);
}

RateFunction rate_from_spec(const std::string& spec) {
    if (!spec.empty() && spec.front() == '@') return load_rate_table(spec.substr(1));
    return RateFunction::expression(RateExpression::parse(spec));
}

}  // namespace nmw
