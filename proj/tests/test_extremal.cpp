// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "mcs/extremal.hpp"
#include "mcs/mcs_fast.hpp"
#include "mcs/strings_core.hpp"

using namespace mcs;

TEST_CASE("extremal_string") {
    CHECK(extremal_string(15).str() == "abaaabbabababaa");
    CHECK(extremal_string(1).str() == "a");
    CHECK(extremal_string(6).str() == "abaaab");
    CHECK(extremal_string(40).str().substr(0, 15) == "abaaabbabababaa");
    CHECK_THROWS_AS(extremal_string(0), std::invalid_argument);
}

TEST_CASE("verify_extremal_oc") {
    CHECK(verify_extremal_oc(15));
    CHECK(verify_extremal_oc(1));
    CHECK(verify_extremal_oc(2));
    CHECK(oc_array(extremal_string(2)).bits == std::vector<std::uint8_t>{1, 0});
    const OCArray oc = oc_array(extremal_string(15));
    std::vector<Pos> ones;
    for (Pos i = 1; i <= 15; ++i) {
        if (oc.at(i)) {
            ones.push_back(i);
        }
    }
    CHECK(ones == std::vector<Pos>{1, 3, 6, 10, 15});
}

TEST_CASE("extremal OC pattern and tightness for every n up to 10^4") {
    for (Pos n = 1; n <= 10000; ++n) {
        REQUIRE(verify_extremal_oc(n));
    }
    // One longer string covers every prefix, since OC is prefix-stable.
    const Pos big = 10000;
    const OCArray oc = oc_array(extremal_string(big));
    Pos runs = 0;
    for (Pos n = 1; n <= big; ++n) {
        runs += oc.bits[n - 1];
        const auto expect = static_cast<Pos>((std::sqrt(8.0 * n + 1.0) - 1.0) / 2.0);
        REQUIRE(runs == expect);
        REQUIRE(triangular_count(n) == expect);
        // floor((sqrt(8n+1)-1)/2) >= sqrt(n) from n = 6 on; n = 5 gives 2 < 2.24.
        if (n >= 6) {
            REQUIRE(static_cast<double>(runs) >= std::sqrt(static_cast<double>(n)));
        }
        REQUIRE(static_cast<double>(runs) <= oc_run_bound(n));
    }
}

TEST_CASE("random_text is deterministic") {
    CHECK(random_text(8, "ab", 7) == random_text(8, "ab", 7));
    CHECK(random_text(200, "abc", 1) != random_text(200, "abc", 2));
    const std::string s = random_text(1000, "xyz", 3).str();
    CHECK(s.find_first_not_of("xyz") == std::string::npos);
    CHECK_THROWS_AS(random_text(3, "", 0), std::invalid_argument);
    CHECK(letters(3) == "abc");
    CHECK_THROWS_AS(letters(0), std::invalid_argument);
    CHECK_THROWS_AS(letters(27), std::invalid_argument);
}

TEST_CASE("bound_report") {
    SUBCASE("extremal") {
        const std::vector<Pos> lengths{15, 5050, 1500};
        const BoundReport r = bound_report(lengths, TextSource::extremal());
        REQUIRE(r.rows.size() == 3);
        CHECK(r.rows[0].n == 15);
        CHECK(r.rows[0].oc_one_runs == 5);
        CHECK(r.rows[1].oc_one_runs == 100);
        CHECK(r.rows[2].n == 1500);
        CHECK(r.within_bounds());
    }
    SUBCASE("unary") {
        const std::vector<Pos> lengths{1, 7, 300};
        const BoundReport r = bound_report(lengths, TextSource::random(5, 1));
        for (const auto& row : r.rows) {
            CHECK(row.mcs_count == 1);
        }
        CHECK(r.within_bounds());
    }
    SUBCASE("random rows hold the bounds") {
        const std::vector<Pos> lengths{10, 100, 1000, 2500};
        const BoundReport r = bound_report(lengths, TextSource::random(42, 2));
        CHECK(r.within_bounds());
        CHECK(r.rows[3].mcs_count == mcs_fast(random_text(2500, "ab", 42)).size());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(bound_report(std::vector<Pos>{}, TextSource::extremal()),
                        std::invalid_argument);
        CHECK_THROWS_AS(bound_report(std::vector<Pos>{3, 0}, TextSource::extremal()),
                        std::invalid_argument);
    }
}

TEST_CASE("BoundRow flags violations") {
    BoundRow row{10, 5, 3, 4, oc_run_bound(10), mcs_count_bound(10)};
    CHECK_FALSE(row.within_bounds());
    row.suffix_run_total = 6;
    CHECK(row.within_bounds());
    row.oc_one_runs = 9;
    CHECK_FALSE(row.within_bounds());
}

TEST_CASE("TSV layout") {
    const std::vector<Pos> lengths{15};
    std::ostringstream os;
    write_tsv(os, bound_report(lengths, TextSource::extremal()));
    std::istringstream is(os.str());
    std::string header;
    std::string row;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(header == "n\tmcs_count\toc_one_runs\tsuffix_run_total\tbound_sqrt\tbound_mcs");
    CHECK(row.rfind("15\t", 0) == 0);
    CHECK(std::count(row.begin(), row.end(), '\t') == 5);
    CHECK(row.find("\t5\t") != std::string::npos);
    CHECK(row.find("\t9.746\t") != std::string::npos);  // 2*sqrt(15)+2
}
