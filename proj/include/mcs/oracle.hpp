// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mcs/strings_core.hpp"
#include "mcs/text.hpp"

namespace mcs {

/// One maximal closed substring occurrence S[start..end], 1-based inclusive.
struct McsSpan {
    Pos start;
    Pos end;

    friend auto operator<=>(const McsSpan&, const McsSpan&) = default;
};

/// Closedness straight from the definition: length 1, or some nonempty border
/// that occurs only as prefix and suffix. Cubic worst case; for testing.
bool closed_definitional(const Text& t);

/// S[i..j] closed and neither single-character extension closed.
bool is_mcs_definitional(const Text& t, Pos i, Pos j);

/// OC array of the suffix S[i..n].
OCArray suffix_oc(const Text& t, Pos i);

/// All MCSs from the OC arrays of consecutive suffixes: a 1 at offset j-i+1
/// of OC(S[i..n]) that has no 1 to its right and no 1 above it in
/// OC(S[i-1..n]). Quadratic time, linear memory. Sorted by (start, end).
std::vector<McsSpan> mcs_oracle(const Text& t);

/// Sum over all suffixes of the number of 1-runs in their OC arrays. Upper
/// bound on the MCS count.
std::uint64_t suffix_run_total(const Text& t);

// OpenMP kernels. Same results as the serial versions above, which remain the
// reference they are tested against.

std::vector<McsSpan> mcs_oracle_omp(const Text& t);
std::uint64_t suffix_run_total_omp(const Text& t);

namespace detail {

/// Appends the MCSs starting at 1-based position i, given the OC bits of
/// S[i..n] (`cur`) and of S[i-1..n] (`above`, ignored when i == 1).
void emit_from_suffix(Pos i, Pos n, const std::vector<std::uint8_t>& cur,
                      const std::vector<std::uint8_t>& above, std::vector<McsSpan>& out);

Pos count_one_runs(const std::vector<std::uint8_t>& bits);

/// Counts OC 1-runs of the suffixes of one text. Texts over at most four
/// distinct symbols use a matching automaton instead of failure links.
class SuffixRunKernel {
public:
    explicit SuffixRunKernel(std::string_view s);

    /// 1-runs in the OC array of s[start..], 0-based start.
    Pos one_runs(std::size_t start, std::vector<Pos>& scratch) const;

private:
    std::string_view s_;
    std::vector<std::uint8_t> codes_;
    unsigned sigma_ = 0;
};

}  // namespace detail

}  // namespace mcs
