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

#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef NMW_HAVE_OPENMP
#include <omp.h>
#endif

namespace nmw {

// Serial is the reference path; Parallel must produce bit-identical results.
enum class Execution { Serial, Parallel };

inline int max_threads() {
#ifdef NMW_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// out[i] = fn(i) for i in [0, n). Results land in index order whatever the
// completion order; the first exception (lowest index) is rethrown.
template <class T, class Fn>
std::vector<T> indexed_map(std::size_t n, Fn&& fn, Execution exec) {
    std::vector<T> out(n);
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<long long>(n);
#ifdef NMW_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long long i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k] = fn(k);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace nmw
