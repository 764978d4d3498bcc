// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <omp.h>

#include <cmath>
#include <stdexcept>
#include <string_view>

#include "mcs/oracle.hpp"

namespace mcs {

// Each suffix is independent once the OC bits of its left neighbour are
// recomputed locally, so a thread owns a contiguous block of start positions
// and carries `above` across its block. Spans come out in start order because
// blocks are concatenated in thread order.

std::vector<McsSpan> mcs_oracle_omp(const Text& t) {
    if (t.empty()) {
        throw std::invalid_argument("mcs_oracle_omp: empty text");
    }
    const Pos n = t.size();
    const std::string_view s = t.view();
    std::vector<std::vector<McsSpan>> per_thread;

#pragma omp parallel
    {
#pragma omp single
        per_thread.resize(static_cast<std::size_t>(omp_get_num_threads()));

        const auto tid = static_cast<std::size_t>(omp_get_thread_num());
        const auto nthreads = static_cast<std::size_t>(omp_get_num_threads());
        // Suffix work is proportional to its length, so cut blocks by area.
        const auto area = [n](double f) {
            // start index i (1-based) at which the remaining area is (1-f)
            const double len = static_cast<double>(n) * (1.0 - std::sqrt(1.0 - f));
            return static_cast<Pos>(len);
        };
        const Pos lo = 1 + area(static_cast<double>(tid) / static_cast<double>(nthreads));
        const Pos hi = tid + 1 == nthreads
                           ? n
                           : area(static_cast<double>(tid + 1) / static_cast<double>(nthreads));

        auto& out = per_thread[tid];
        std::vector<Pos> scratch;
        std::vector<std::uint8_t> above;
        std::vector<std::uint8_t> cur;
        if (lo > 1 && lo <= hi) {
            detail::oc_bits(s.substr(lo - 2), scratch, above);
        }
        for (Pos i = lo; i <= hi; ++i) {
            detail::oc_bits(s.substr(i - 1), scratch, cur);
            detail::emit_from_suffix(i, n, cur, above, out);
            above.swap(cur);
        }
    }

    std::size_t total = 0;
    for (const auto& part : per_thread) {
        total += part.size();
    }
    std::vector<McsSpan> spans;
    spans.reserve(total);
    for (const auto& part : per_thread) {
        spans.insert(spans.end(), part.begin(), part.end());
    }
    return spans;
}

std::uint64_t suffix_run_total_omp(const Text& t) {
    if (t.empty()) {
        throw std::invalid_argument("suffix_run_total_omp: empty text");
    }
    const std::string_view s = t.view();
    const auto n = static_cast<std::int64_t>(s.size());
    std::uint64_t total = 0;
    const detail::SuffixRunKernel kernel(s);

#pragma omp parallel reduction(+ : total)
    {
        std::vector<Pos> scratch;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < n; ++i) {
            total += kernel.one_runs(static_cast<std::size_t>(i), scratch);
        }
    }
    return total;
}

}  // namespace mcs
