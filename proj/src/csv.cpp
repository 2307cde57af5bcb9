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

#include "nmw/csv.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "nmw/errors.hpp"

namespace nmw {

std::string format_number(double x) {
    if (x == 0.0) return "0";  // folds -0
    char buf[40];
    // to_chars ignores the C locale.
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

ComplexMatrix read_matrix_csv(std::istream& in, const std::string& name) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<double> values;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos) comma = line.size();
            std::string field = line.substr(pos, comma - pos);
            const auto b = field.find_first_not_of(" \t\r");
            const auto e = field.find_last_not_of(" \t\r");
            field = b == std::string::npos ? std::string() : field.substr(b, e - b + 1);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
                throw ConfigError(name + ":" + std::to_string(lineno) + ": bad number '" + field + "'");
            values.push_back(v);
            pos = comma + 1;
        }
        if (values.size() % 2 != 0)
            throw ConfigError(name + ":" + std::to_string(lineno) + ": odd number of fields, expected re,im pairs");
        rows.push_back(std::move(values));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw ConfigError(name + ": no matrix rows");
    if (n > kMaxDim) throw ConfigError(name + ": dimension exceeds supported maximum");
    std::vector<cplx> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != 2 * n)
            throw ConfigError(name + ": row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size() / 2) +
                              " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) entries.emplace_back(rows[i][2 * j], rows[i][2 * j + 1]);
    }
    return ComplexMatrix(n, std::move(entries));
}

std::string write_matrix_csv(const ComplexMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out += ',';
            out += format_number(m(i, j).real());
            out += ',';
            out += format_number(m(i, j).imag());
        }
        out += '\n';
    }
    return out;
}

}  // namespace nmw
