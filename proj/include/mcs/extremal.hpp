// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcs/text.hpp"

namespace mcs {

/// Length-n prefix of u = a * prod_{k>0} comp(u[k]) u[1..k] over {a, b},
/// the binary string whose OC array is 1 0 1 00 1 000 1 ...
/// Throws std::invalid_argument for n == 0.
Text extremal_string(Pos n);

/// True iff OC(extremal_string(n)) has 1s exactly at the triangular numbers <= n.
bool verify_extremal_oc(Pos n);

/// Number of triangular numbers k(k+1)/2 <= n, k >= 1.
Pos triangular_count(Pos n);

/// Seeded random text over `alphabet`: symbol k is alphabet[rng() % size]
/// with rng = std::mt19937_64(seed). Identical on every platform.
Text random_text(Pos n, std::string_view alphabet, std::uint64_t seed);

/// First `sigma` lowercase letters (sigma in 1..26).
std::string letters(unsigned sigma);

/// 2 sqrt(n) + 2: cap on the number of 1-runs in an OC array of length n.
double oc_run_bound(Pos n);
/// (4/3)(n+1)^1.5 + 2n + 4: the per-suffix run cap summed over all suffixes.
double mcs_count_bound(Pos n);

/// MCS count, oracle up to 2000 and mcs_fast above. On 1000..2000 both run
/// and must agree (std::logic_error otherwise).
std::uint64_t count_mcs(const Text& t);

struct TextSource {
    enum class Kind { extremal, random };
    Kind kind = Kind::extremal;
    std::uint64_t seed = 0;
    unsigned sigma = 2;

    static TextSource extremal() { return {}; }
    static TextSource random(std::uint64_t seed, unsigned sigma) {
        return {Kind::random, seed, sigma};
    }
    [[nodiscard]] Text generate(Pos n) const;
};

struct BoundRow {
    Pos n = 0;
    std::uint64_t mcs_count = 0;
    Pos oc_one_runs = 0;
    std::uint64_t suffix_run_total = 0;
    double bound_sqrt = 0;
    double bound_mcs = 0;

    /// mcs_count <= suffix_run_total <= bound_mcs and oc_one_runs <= bound_sqrt.
    [[nodiscard]] bool within_bounds() const noexcept;
};

struct BoundReport {
    std::vector<BoundRow> rows;

    [[nodiscard]] bool within_bounds() const noexcept;
};

/// One row per length, in input order; rows are computed concurrently.
/// Throws std::invalid_argument if `lengths` is empty or contains 0.
BoundReport bound_report(std::span<const Pos> lengths, const TextSource& source);

/// Header line, then one tab-separated row per length:
/// n, mcs_count, oc_one_runs, suffix_run_total, bound_sqrt, bound_mcs.
void write_tsv(std::ostream& os, const BoundReport& report);

}  // namespace mcs
