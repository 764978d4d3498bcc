// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mcs/text.hpp"

namespace mcs {

// Prefix arrays. Storage index k describes the prefix S[1..k+1]; `at(i)`
// takes the 1-based prefix length i and throws std::out_of_range.

/// Length of the longest proper border of each prefix.
struct BorderArray {
    std::vector<Pos> values;

    [[nodiscard]] Pos size() const noexcept { return static_cast<Pos>(values.size()); }
    [[nodiscard]] Pos at(Pos i) const;
    friend bool operator==(const BorderArray&, const BorderArray&) = default;
};

/// Length of the longest repeated prefix of each prefix (running max of B).
struct PArray {
    std::vector<Pos> values;

    [[nodiscard]] Pos size() const noexcept { return static_cast<Pos>(values.size()); }
    [[nodiscard]] Pos at(Pos i) const;
    friend bool operator==(const PArray&, const PArray&) = default;
};

/// Closedness indicator of each prefix.
struct OCArray {
    std::vector<std::uint8_t> bits;

    [[nodiscard]] Pos size() const noexcept { return static_cast<Pos>(bits.size()); }
    [[nodiscard]] bool at(Pos i) const;
    friend bool operator==(const OCArray&, const OCArray&) = default;
};

struct OcRun {
    bool bit;
    Pos length;
    friend bool operator==(const OcRun&, const OcRun&) = default;
};

/// Maximal-block run-length encoding of an OC array.
struct OcRle {
    std::vector<OcRun> runs;

    /// Number of runs of 1s (m in 1^{t_1} 0^{k_1} ... 1^{t_m} 0^{k_m}).
    [[nodiscard]] Pos one_runs() const noexcept;
    friend bool operator==(const OcRle&, const OcRle&) = default;
};

/// Failure-function recurrence; linear time. Empty text gives an empty array.
BorderArray border_array(const Text& t);

/// All border lengths of S[1..i] in ascending order, 0 included.
/// Walks the chain b[i], b[b[i]], ..., 0.
std::vector<Pos> borders_at(const BorderArray& b, Pos i);

PArray p_array(const BorderArray& b);

/// Throws std::invalid_argument on empty text.
OCArray oc_array(const Text& t);

/// True iff t is closed (last OC entry). Throws std::invalid_argument on empty text.
bool is_closed(const Text& t);

OcRle oc_runs(const OCArray& oc);

/// Same as oc_runs(oc).one_runs() without materialising the runs.
Pos count_one_runs(const OCArray& oc);

namespace detail {

/// Border array of raw bytes into a caller-owned buffer (0-based).
void border_values(std::string_view s, std::vector<Pos>& out);

/// OC bits of raw bytes, reusing `border_scratch`. oc[k] = 1 iff b[k] exceeds
/// every earlier border value, i.e. iff P grows at k.
void oc_bits(std::string_view s, std::vector<Pos>& border_scratch, std::vector<std::uint8_t>& out);

/// Number of 1-runs in the OC array of s, in one pass without storing the bits.
Pos oc_one_runs(std::string_view s, std::vector<Pos>& border_scratch);

}  // namespace detail

}  // namespace mcs
