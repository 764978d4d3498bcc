// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcs/oracle.hpp"
#include "mcs/pos_set.hpp"
#include "mcs/text.hpp"

namespace mcs {

/// Two occurrences p < q of the path label u of a suffix-tree node, with
/// depth = |u|. Suffixes p and q share exactly `depth` characters and differ
/// in their preceding-character class.
struct CandidatePair {
    Pos p;
    Pos q;
    Pos depth;

    friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

/// Length-1 MCSs: letters whose neighbours (where present) differ from them.
std::vector<McsSpan> singleton_mcs(const Text& t);

/// For each element e of `smaller`, its nearest successor and nearest
/// predecessor among the classes of `larger` that differ from e's class.
/// At most two candidates per element.
std::vector<CandidatePair> pairs_at_node(const ClassedPosSets& smaller,
                                         const ClassedPosSets& larger, Pos depth);

/// Keeps the candidates with no occurrence strictly between p and q, where the
/// occurrences are the union of `occurrences`.
std::vector<CandidatePair> filter_consecutive(std::span<const CandidatePair> cands,
                                              std::span<const ClassedPosSets* const> occurrences);

struct McsFastStats {
    /// Elements iterated on the smaller side, summed over binary nodes.
    std::uint64_t smaller_half_work = 0;
    std::uint64_t candidates = 0;
    std::uint64_t pairs_emitted = 0;
    std::uint64_t singletons = 0;
};

/// All MCSs via a bottom-up pass over the binarized suffix tree. Sorted by
/// (start, end). Throws std::invalid_argument on empty text and
/// std::logic_error if a span would be emitted twice.
std::vector<McsSpan> mcs_fast(const Text& t, McsFastStats* stats = nullptr);

}  // namespace mcs
