// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <stdexcept>

#include "brute.hpp"
#include "doctest.h"
#include "mcs/extremal.hpp"
#include "mcs/mcs_fast.hpp"

using namespace mcs;
using mcs::testing::for_all_strings;

namespace {

using Spans = std::vector<McsSpan>;
using Cands = std::vector<CandidatePair>;

constexpr CharClass kA = 'a' + 1;
constexpr CharClass kB = 'b' + 1;

ClassedPosSets sets(std::initializer_list<std::pair<CharClass, Pos>> items) {
    ClassedPosSets s;
    for (const auto& [c, p] : items) {
        s.insert(c, p);
    }
    return s;
}

}  // namespace

TEST_CASE("singleton_mcs") {
    CHECK(singleton_mcs(Text("abaabab")) == Spans{{1, 1}, {2, 2}, {5, 5}, {6, 6}, {7, 7}});
    CHECK(singleton_mcs(Text("aaaa")).empty());
    CHECK(singleton_mcs(Text("ab")) == Spans{{1, 1}, {2, 2}});
    CHECK(singleton_mcs(Text("a")) == Spans{{1, 1}});
    CHECK_THROWS_AS(singleton_mcs(Text("")), std::invalid_argument);
}

TEST_CASE("pairs_at_node") {
    CHECK(pairs_at_node(sets({{kA, 4}}), sets({{kBeginClass, 1}}), 3) == Cands{{1, 4, 3}});
    CHECK(pairs_at_node(sets({{kA, 3}}), sets({{kA, 1}}), 1).empty());
    CHECK(pairs_at_node(sets({{kB, 6}}), sets({{kA, 4}, {kBeginClass, 1}}), 2) == Cands{{4, 6, 2}});

    // Both neighbours, nearest over the opposite classes.
    const Cands both = pairs_at_node(sets({{kA, 5}}), sets({{kB, 2}, {kBeginClass, 1}, {kB, 9}}), 1);
    CHECK(both == Cands{{2, 5, 1}, {5, 9, 1}});
}

TEST_CASE("filter_consecutive") {
    const ClassedPosSets left = sets({{kBeginClass, 1}, {kA, 4}});
    const ClassedPosSets right = sets({{kB, 6}});
    const std::vector<const ClassedPosSets*> occ{&left, &right};
    CHECK(filter_consecutive(Cands{{1, 4, 2}, {4, 6, 2}}, occ) == Cands{{1, 4, 2}, {4, 6, 2}});
    CHECK(filter_consecutive(Cands{{1, 6, 2}}, occ).empty());
    CHECK(filter_consecutive(Cands{}, occ).empty());
}

TEST_CASE("mcs_fast examples") {
    CHECK(mcs_fast(Text("abaabab")) ==
          Spans{{1, 1}, {1, 3}, {1, 6}, {2, 2}, {3, 4}, {4, 7}, {5, 5}, {6, 6}, {7, 7}});
    const Spans s = mcs_fast(Text("aabaaaabaaba"));
    CHECK(std::find(s.begin(), s.end(), McsSpan{4, 7}) != s.end());
    CHECK(std::find(s.begin(), s.end(), McsSpan{6, 12}) != s.end());
    CHECK(mcs_fast(Text("aa")) == Spans{{1, 2}});
    CHECK(mcs_fast(Text("aaaa")) == Spans{{1, 4}});
    CHECK(mcs_fast(Text("a")) == Spans{{1, 1}});
    CHECK_THROWS_AS(mcs_fast(Text("")), std::invalid_argument);
}

TEST_CASE("mcs_fast equals the oracle on all short binary and ternary strings") {
    for_all_strings("ab", 12, [](const std::string& s) {
        const Text t(s);
        REQUIRE(mcs_fast(t) == mcs_oracle(t));
    });
    for_all_strings("abc", 7, [](const std::string& s) {
        const Text t(s);
        REQUIRE(mcs_fast(t) == mcs_oracle(t));
    });
}

TEST_CASE("mcs_fast equals the oracle on random texts") {
    std::mt19937_64 rng(77);
    for (const unsigned sigma : {2u, 3u, 4u, 26u}) {
        for (int trial = 0; trial < 150; ++trial) {
            const Text t = random_text(static_cast<Pos>(1 + rng() % 300), letters(sigma), rng());
            REQUIRE(mcs_fast(t) == mcs_oracle(t));
        }
    }
}

TEST_CASE("high-degree nodes over raw bytes") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::string s(1 + rng() % 200, '\0');
        for (auto& ch : s) {
            ch = static_cast<char>(rng() % 256);
        }
        if (trial % 2 == 0) {
            // Repeat a block so that deep nodes have many children.
            s += s.substr(0, s.size() / 2);
        }
        const Text t(s);
        REQUIRE(mcs_fast(t) == mcs_oracle(t));
    }
}

TEST_CASE("each emitted pair is a consecutive, left- and right-maximal pair of its border") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const Text t = random_text(static_cast<Pos>(2 + rng() % 60), letters(2 + rng() % 2), rng());
        const std::string& s = t.str();
        const auto n = static_cast<Pos>(s.size());
        for (const auto& sp : mcs_fast(t)) {
            if (sp.start == sp.end) {
                continue;
            }
            const std::string w = s.substr(sp.start - 1, sp.end - sp.start + 1);
            const auto b = mcs::testing::brute_borders(w).back();
            REQUIRE(b >= 1);
            const std::string u = w.substr(0, b);
            // u occurs in w only as prefix and suffix.
            REQUIRE(w.find(u, 1) == w.size() - b);
            const Pos q = sp.end - b + 1;
            // Right-maximal: the characters after the two occurrences differ.
            if (q + b - 1 < n) {
                REQUIRE(s[sp.start - 1 + b] != s[q - 1 + b]);
            }
            // Left-maximal.
            if (sp.start > 1) {
                REQUIRE(s[sp.start - 2] != s[q - 2]);
            }
        }
    }
}

TEST_CASE("smaller-half work is O(n log n)") {
    for (const Pos n : {1000u, 10000u, 100000u}) {
        McsFastStats stats;
        const auto spans = mcs_fast(random_text(n, "ab", n), &stats);
        const double bound = 64.0 * n * std::log2(static_cast<double>(n));
        CHECK(static_cast<double>(stats.smaller_half_work) <= bound);
        CHECK(stats.pairs_emitted + stats.singletons == spans.size());
        CHECK(stats.candidates >= stats.pairs_emitted);
    }
}
