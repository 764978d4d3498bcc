// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcs/oracle.hpp"
#include "mcs/text.hpp"

namespace mcs::cli {

enum class Command { mcs, arrays, stats, gen, bench };
enum class Algo { fast, oracle, both };
enum class GenMode { extremal, random };

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kMismatch = 3;

struct CliConfig {
    Command command = Command::mcs;
    std::string input = "-";
    std::string output = "-";
    Algo algo = Algo::fast;
    bool keep_newline = false;

    GenMode gen_mode = GenMode::extremal;
    Pos length = 0;
    std::string alphabet = "ab";
    std::uint64_t seed = 0;
    bool trailing_newline = false;

    std::vector<Pos> sizes;
};

/// Strips exactly one trailing '\n' unless keep_newline.
std::string apply_newline_policy(std::string bytes, bool keep_newline);

/// The fast result if it equals the oracle's; otherwise reports both counts
/// and the first differing span on `err` and returns nothing.
std::optional<std::vector<McsSpan>> reconcile(std::vector<McsSpan> fast,
                                              const std::vector<McsSpan>& oracle,
                                              std::ostream& err);

/// Parses argv and runs the selected command. `in` stands in for stdin when
/// the input path is "-", `out` for stdout when the output path is "-".
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

int cmd_mcs(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_arrays(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_stats(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_gen(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace mcs::cli
