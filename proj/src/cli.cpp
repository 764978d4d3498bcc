// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mcs/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mcs/extremal.hpp"
#include "mcs/mcs_fast.hpp"
#include "mcs/oracle.hpp"
#include "mcs/strings_core.hpp"

namespace mcs::cli {

namespace {

constexpr Pos kOracleBenchLimit = 100000;

/// Output stream for "-" or a path.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (path == "-") {
            os_ = &fallback;
        } else {
            file_.open(path, std::ios::binary);
            os_ = file_ ? &file_ : nullptr;
        }
    }
    explicit operator bool() const { return os_ != nullptr; }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

std::optional<std::string> read_all(const std::string& path, std::istream& in) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        return std::nullopt;
    }
    return std::string(std::istreambuf_iterator<char>(file), {});
}

/// Reads and validates the input; on failure reports and sets `code`.
std::optional<Text> load_text(const CliConfig& cfg, std::istream& in, std::ostream& err,
                              int& code) {
    auto raw = read_all(cfg.input, in);
    if (!raw) {
        err << "error: cannot read input '" << cfg.input << "'\n";
        code = kBadInput;
        return std::nullopt;
    }
    std::string bytes = apply_newline_policy(std::move(*raw), cfg.keep_newline);
    if (bytes.empty()) {
        err << "error: input is empty\n";
        code = kBadInput;
        return std::nullopt;
    }
    if (bytes.size() > kMaxTextLength) {
        err << "error: input longer than " << kMaxTextLength << " bytes\n";
        code = kBadInput;
        return std::nullopt;
    }
    return Text(std::move(bytes));
}

/// Runs the selected algorithm(s). With Algo::both, a disagreement is reported
/// on `err` and nothing is returned.
std::optional<std::vector<McsSpan>> compute_mcs(const Text& t, Algo algo, std::ostream& err) {
    switch (algo) {
        case Algo::fast:
            return mcs_fast(t);
        case Algo::oracle:
            return mcs_oracle(t);
        case Algo::both:
            return reconcile(mcs_fast(t), mcs_oracle(t), err);
    }
    return std::nullopt;
}

template <typename Values>
void write_row(std::ostream& os, const char* label, const Values& values) {
    os << label;
    for (const auto v : values) {
        os << ' ' << static_cast<std::uint64_t>(v);
    }
    os << '\n';
}

}  // namespace

std::optional<std::vector<McsSpan>> reconcile(std::vector<McsSpan> fast,
                                              const std::vector<McsSpan>& oracle,
                                              std::ostream& err) {
    if (fast == oracle) {
        return fast;
    }
    err << "error: fast and oracle disagree: fast=" << fast.size() << " oracle=" << oracle.size()
        << '\n';
    const auto [f, o] = std::mismatch(fast.begin(), fast.end(), oracle.begin(), oracle.end());
    if (f != fast.end()) {
        err << "first differing span (fast): " << f->start << '\t' << f->end << '\n';
    }
    if (o != oracle.end()) {
        err << "first differing span (oracle): " << o->start << '\t' << o->end << '\n';
    }
    return std::nullopt;
}

std::string apply_newline_policy(std::string bytes, bool keep_newline) {
    if (!keep_newline && !bytes.empty() && bytes.back() == '\n') {
        bytes.pop_back();
    }
    return bytes;
}

int cmd_mcs(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    int code = kOk;
    const auto text = load_text(cfg, in, err, code);
    if (!text) {
        return code;
    }
    const auto spans = compute_mcs(*text, cfg.algo, err);
    if (!spans) {
        return kMismatch;
    }
    Sink sink(cfg.output, out);
    if (!sink) {
        err << "error: cannot open output '" << cfg.output << "'\n";
        return kBadInput;
    }
    std::string buf;
    for (const auto& s : *spans) {
        buf += std::to_string(s.start);
        buf += '\t';
        buf += std::to_string(s.end);
        buf += '\n';
    }
    sink.stream() << buf;
    return kOk;
}

int cmd_arrays(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    int code = kOk;
    const auto text = load_text(cfg, in, err, code);
    if (!text) {
        return code;
    }
    Sink sink(cfg.output, out);
    if (!sink) {
        err << "error: cannot open output '" << cfg.output << "'\n";
        return kBadInput;
    }
    const BorderArray b = border_array(*text);
    write_row(sink.stream(), "B:", b.values);
    write_row(sink.stream(), "P:", p_array(b).values);
    write_row(sink.stream(), "OC:", oc_array(*text).bits);
    return kOk;
}

int cmd_stats(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    int code = kOk;
    const auto text = load_text(cfg, in, err, code);
    if (!text) {
        return code;
    }
    const auto spans = compute_mcs(*text, cfg.algo, err);
    if (!spans) {
        return kMismatch;
    }
    Sink sink(cfg.output, out);
    if (!sink) {
        err << "error: cannot open output '" << cfg.output << "'\n";
        return kBadInput;
    }
    auto& os = sink.stream();
    os << "n: " << text->size() << '\n';
    os << "mcs_count: " << spans->size() << '\n';
    os << "singleton_count: " << singleton_mcs(*text).size() << '\n';
    os << "oc_one_runs: " << count_one_runs(oc_array(*text)) << '\n';
    os << "suffix_run_total: " << suffix_run_total(*text) << '\n';
    return kOk;
}

int cmd_gen(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.length == 0) {
        err << "error: --length must be positive\n";
        return kUsage;
    }
    if (cfg.gen_mode == GenMode::random && cfg.alphabet.empty()) {
        err << "error: --alphabet must be nonempty\n";
        return kUsage;
    }
    Sink sink(cfg.output, out);
    if (!sink) {
        err << "error: cannot open output '" << cfg.output << "'\n";
        return kBadInput;
    }
    const Text t = cfg.gen_mode == GenMode::extremal
                       ? extremal_string(cfg.length)
                       : random_text(cfg.length, cfg.alphabet, cfg.seed);
    sink.stream() << t.str();
    if (cfg.trailing_newline) {
        sink.stream() << '\n';
    }
    return kOk;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.sizes.empty()) {
        err << "error: no sizes given\n";
        return kUsage;
    }
    if (cfg.alphabet.empty()) {
        err << "error: --alphabet must be nonempty\n";
        return kUsage;
    }
    Sink sink(cfg.output, out);
    if (!sink) {
        err << "error: cannot open output '" << cfg.output << "'\n";
        return kBadInput;
    }
    auto& os = sink.stream();
    os << "n\talgo\twall_millis\tmcs_count\n";
    os << std::fixed << std::setprecision(3);

    auto timed = [](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::size_t count = fn();
        const auto t1 = std::chrono::steady_clock::now();
        return std::pair{std::chrono::duration<double, std::milli>(t1 - t0).count(), count};
    };
    for (const Pos n : cfg.sizes) {
        if (n == 0) {
            err << "error: sizes must be positive\n";
            return kUsage;
        }
        const Text t = random_text(n, cfg.alphabet, cfg.seed);
        if (cfg.algo != Algo::oracle) {
            const auto [ms, count] = timed([&] { return mcs_fast(t).size(); });
            os << n << "\tfast\t" << ms << '\t' << count << '\n' << std::flush;
        }
        if (cfg.algo != Algo::fast) {
            if (n > kOracleBenchLimit) {
                err << "note: oracle skipped for n=" << n << '\n';
                continue;
            }
            const auto [ms, count] = timed([&] { return mcs_oracle(t).size(); });
            os << n << "\toracle\t" << ms << '\t' << count << '\n' << std::flush;
        }
    }
    return kOk;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Open/closed structure and maximal closed substrings of byte strings", "mcs"};
    app.require_subcommand(1);

    CliConfig cfg;
    const std::map<std::string, Algo> algos{
        {"fast", Algo::fast}, {"oracle", Algo::oracle}, {"both", Algo::both}};

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", cfg.input, "Input file, '-' for stdin");
        sub->add_option("-i,--input", cfg.input, "Input file, '-' for stdin");
        sub->add_option("-o,--output", cfg.output, "Output file, '-' for stdout");
        sub->add_flag("--keep-newline", cfg.keep_newline,
                      "Keep a trailing newline as part of the text");
    };
    auto add_algo = [&](CLI::App* sub) {
        sub->add_option("-a,--algo", cfg.algo, "fast, oracle, or both (verify)")
            ->transform(CLI::CheckedTransformer(algos, CLI::ignore_case));
    };

    auto* mcs = app.add_subcommand("mcs", "List maximal closed substrings as start<TAB>end");
    add_input(mcs);
    add_algo(mcs);

    auto* arrays = app.add_subcommand("arrays", "Print the B, P and OC arrays");
    add_input(arrays);

    auto* stats = app.add_subcommand("stats", "Print summary counts");
    add_input(stats);
    add_algo(stats);

    auto* gen = app.add_subcommand("gen", "Generate a text");
    gen->require_subcommand(1);
    auto* extremal = gen->add_subcommand("extremal", "Prefix of the extremal OC string");
    auto* random = gen->add_subcommand("random", "Seeded random text");
    for (auto* sub : {extremal, random}) {
        sub->add_option("-n,--length", cfg.length, "Text length")->required();
        sub->add_option("-o,--output", cfg.output, "Output file, '-' for stdout");
        sub->add_flag("--newline", cfg.trailing_newline, "Append a trailing newline");
    }
    random->add_option("--alphabet", cfg.alphabet, "Symbols to draw from")->capture_default_str();
    random->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Time the algorithms on seeded random texts");
    std::optional<unsigned> min_exp;
    std::optional<unsigned> max_exp;
    cfg.algo = Algo::both;
    bench->add_option("--sizes", cfg.sizes, "Text lengths")->delimiter(',');
    bench->add_option("--min-exp", min_exp, "Smallest size as a power of two");
    bench->add_option("--max-exp", max_exp, "Largest size as a power of two");
    bench->add_option("--alphabet", cfg.alphabet, "Symbols to draw from")->capture_default_str();
    bench->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
    bench->add_option("-o,--output", cfg.output, "Output file, '-' for stdout");
    add_algo(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*mcs) {
            if (mcs->count("--algo") == 0) {
                cfg.algo = Algo::fast;
            }
            return cmd_mcs(cfg, in, out, err);
        }
        if (*arrays) {
            return cmd_arrays(cfg, in, out, err);
        }
        if (*stats) {
            if (stats->count("--algo") == 0) {
                cfg.algo = Algo::fast;
            }
            return cmd_stats(cfg, in, out, err);
        }
        if (*gen) {
            cfg.command = Command::gen;
            cfg.gen_mode = *extremal ? GenMode::extremal : GenMode::random;
            return cmd_gen(cfg, out, err);
        }
        cfg.command = Command::bench;
        if (min_exp || max_exp) {
            const unsigned lo = min_exp.value_or(10);
            const unsigned hi = max_exp.value_or(lo);
            if (lo > hi || hi > 31) {
                err << "error: need min-exp <= max-exp <= 31\n";
                return kUsage;
            }
            for (unsigned e = lo; e <= hi; ++e) {
                cfg.sizes.push_back(Pos{1} << e);
            }
        }
        return cmd_bench(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
}

}  // namespace mcs::cli
