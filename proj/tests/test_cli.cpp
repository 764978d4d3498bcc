// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mcs/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "mcs");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = mcs::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST_CASE("mcs command") {
    const Result r = invoke({"mcs", "--algo", "oracle"}, "abaabab");
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 9);
    CHECK(ls.front() == "1\t1");
    CHECK(ls.back() == "7\t7");

    const Result worked = invoke({"mcs"}, "aabaaaabaaba\n");
    CHECK(worked.code == 0);
    CHECK(worked.out.find("4\t7\n") != std::string::npos);
    CHECK(worked.out.find("6\t12\n") != std::string::npos);

    const Result both = invoke({"mcs", "-a", "both"}, "aabaaaabaaba");
    CHECK(both.code == 0);
    CHECK(both.out == worked.out);

    CHECK(invoke({"mcs"}, "").code == 2);
    CHECK(invoke({"mcs"}, "\n").code == 2);
    CHECK(invoke({"mcs", "/nonexistent/file"}).code == 2);
    CHECK(invoke({"mcs", "--algo", "slow"}, "ab").code == 1);
}

TEST_CASE("newline policy") {
    CHECK(mcs::cli::apply_newline_policy("ab\n", false) == "ab");
    CHECK(mcs::cli::apply_newline_policy("ab\n\n", false) == "ab\n");
    CHECK(mcs::cli::apply_newline_policy("ab\n", true) == "ab\n");
    CHECK(mcs::cli::apply_newline_policy("ab", false) == "ab");

    const Result kept = invoke({"arrays", "--keep-newline"}, "a\n");
    CHECK(kept.out == "B: 0 0\nP: 0 0\nOC: 1 0\n");
    CHECK(invoke({"mcs", "--keep-newline"}, "\n").code == 0);
}

TEST_CASE("arrays command") {
    const Result r = invoke({"arrays"}, "aabaaaabaaba");
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "B: 0 1 0 1 2 2 2 3 4 5 3 4");
    CHECK(ls[1] == "P: 0 1 1 1 2 2 2 3 4 5 5 5");
    CHECK(ls[2] == "OC: 1 1 0 0 1 0 0 1 1 1 0 0");
    CHECK(lines(invoke({"arrays"}, "a").out)[2] == "OC: 1");
}

TEST_CASE("stats command") {
    const Result r = invoke({"stats"}, "abaabab");
    CHECK(r.code == 0);
    CHECK(r.out == "n: 7\nmcs_count: 9\nsingleton_count: 5\noc_one_runs: 3\nsuffix_run_total: 12\n");
    CHECK(invoke({"stats"}, "aaaa").out.find("mcs_count: 1\n") != std::string::npos);
    CHECK(invoke({"stats", "-a", "both"}, "ab").out.find("singleton_count: 2\n") != std::string::npos);
}

TEST_CASE("gen command") {
    CHECK(invoke({"gen", "extremal", "--length", "15"}).out == "abaaabbabababaa");
    CHECK(invoke({"gen", "extremal", "--length", "1"}).out == "a");
    CHECK(invoke({"gen", "extremal", "-n", "3", "--newline"}).out == "aba\n");
    const Result a = invoke({"gen", "random", "--length", "8", "--alphabet", "ab", "--seed", "7"});
    const Result b = invoke({"gen", "random", "--length", "8", "--alphabet", "ab", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out.size() == 8);
    CHECK(a.out == b.out);
    CHECK(invoke({"gen", "random", "--length", "0"}).code == 1);
    CHECK(invoke({"gen"}).code == 1);
    CHECK(invoke({}).code == 1);
}

TEST_CASE("bench command") {
    const Result r = invoke({"bench", "--min-exp", "6", "--max-exp", "8", "--seed", "1"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 7);
    CHECK(ls[0] == "n\talgo\twall_millis\tmcs_count");
    for (std::size_t k = 1; k < ls.size(); k += 2) {
        // Same text for both algorithms: counts agree.
        const auto count_of = [](const std::string& line) { return line.substr(line.rfind('\t') + 1); };
        CHECK(ls[k].find("\tfast\t") != std::string::npos);
        CHECK(ls[k + 1].find("\toracle\t") != std::string::npos);
        CHECK(count_of(ls[k]) == count_of(ls[k + 1]));
    }
    const Result fast_only = invoke({"bench", "--sizes", "100,200", "--algo", "fast"});
    CHECK(lines(fast_only.out).size() == 3);
    CHECK(invoke({"bench"}).code == 1);
}

TEST_CASE("file input and output") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto in_path = dir / "mcs_cli_test_in.txt";
    const auto out_path = dir / "mcs_cli_test_out.txt";
    {
        std::ofstream f(in_path, std::ios::binary);
        f << "aa\n";
    }
    const Result r = invoke({"mcs", "-i", in_path.string(), "-o", out_path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out_path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(f)), {});
    CHECK(content == "1\t2\n");
    std::filesystem::remove(in_path);
    std::filesystem::remove(out_path);
}

TEST_CASE("output is deterministic") {
    const std::string text = "abbabaabbaababbabaababbaabbabaab";
    CHECK(invoke({"mcs"}, text).out == invoke({"mcs"}, text).out);
    CHECK(invoke({"stats"}, text).out == invoke({"stats"}, text).out);
}

TEST_CASE("verification run fails closed on disagreement") {
    std::ostringstream err;
    const std::vector<mcs::McsSpan> fast{{1, 1}, {2, 3}};
    const std::vector<mcs::McsSpan> oracle{{1, 1}, {2, 2}, {3, 3}};
    CHECK_FALSE(mcs::cli::reconcile(fast, oracle, err).has_value());
    CHECK(err.str().find("fast=2 oracle=3") != std::string::npos);
    CHECK(err.str().find("first differing span (fast): 2\t3") != std::string::npos);
    CHECK(mcs::cli::reconcile(fast, fast, err).value() == fast);
}
