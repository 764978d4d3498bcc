// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mcs/oracle.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcs {

namespace {

void require_nonempty(const Text& t, const char* what) {
    if (t.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty text");
    }
}

bool closed_view(std::string_view s) {
    const std::size_t n = s.size();
    if (n == 1) {
        return true;
    }
    for (std::size_t len = 1; len < n; ++len) {
        const std::string_view border = s.substr(0, len);
        if (s.substr(n - len) != border) {
            continue;
        }
        bool internal = false;
        for (std::size_t k = 1; k + len < n && !internal; ++k) {
            internal = s.substr(k, len) == border;
        }
        if (!internal) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool closed_definitional(const Text& t) {
    require_nonempty(t, "closed_definitional");
    return closed_view(t.view());
}

bool is_mcs_definitional(const Text& t, Pos i, Pos j) {
    const Pos n = t.size();
    if (i < 1 || i > j || j > n) {
        throw std::out_of_range("span (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside 1.." + std::to_string(n));
    }
    const std::string_view s = t.view();
    if (!closed_view(s.substr(i - 1, j - i + 1))) {
        return false;
    }
    if (i > 1 && closed_view(s.substr(i - 2, j - i + 2))) {
        return false;
    }
    if (j < n && closed_view(s.substr(i - 1, j - i + 2))) {
        return false;
    }
    return true;
}

OCArray suffix_oc(const Text& t, Pos i) {
    if (i < 1 || i > t.size()) {
        throw std::out_of_range("suffix start " + std::to_string(i) + " outside 1.." +
                                std::to_string(t.size()));
    }
    OCArray oc;
    std::vector<Pos> scratch;
    detail::oc_bits(t.view().substr(i - 1), scratch, oc.bits);
    return oc;
}

namespace detail {

void emit_from_suffix(Pos i, Pos n, const std::vector<std::uint8_t>& cur,
                      const std::vector<std::uint8_t>& above, std::vector<McsSpan>& out) {
    // cur[k] describes S[i..i+k]; above[k+1] describes S[i-1..i+k].
    const std::size_t len = n - i + 1;
    for (std::size_t k = 0; k < len; ++k) {
        if (cur[k] == 0) {
            continue;
        }
        if (k + 1 < len && cur[k + 1] != 0) {
            continue;
        }
        if (i > 1 && above[k + 1] != 0) {
            continue;
        }
        out.push_back({i, static_cast<Pos>(i + k)});
    }
}

Pos count_one_runs(const std::vector<std::uint8_t>& bits) {
    Pos m = 0;
    std::uint8_t prev = 0;
    for (const auto b : bits) {
        m += (b != 0 && prev == 0) ? 1 : 0;
        prev = b;
    }
    return m;
}

namespace {

constexpr unsigned kAutomatonMaxSigma = 4;

template <unsigned Sigma>
Pos automaton_one_runs(const std::uint8_t* c, std::size_t n, std::vector<Pos>& delta) {
    delta.resize(n * Sigma);
    Pos* d = delta.data();
    for (unsigned a = 0; a < Sigma; ++a) {
        d[a] = 0;
    }
    d[c[0]] = 1;
    Pos k = 0;
    Pos running_max = 0;
    Pos runs = 1;
    Pos prev_one = 1;
    for (std::size_t i = 1; i < n; ++i) {
        const Pos* from = d + static_cast<std::size_t>(k) * Sigma;
        Pos* row = d + i * Sigma;
        for (unsigned a = 0; a < Sigma; ++a) {
            row[a] = from[a];
        }
        row[c[i]] = static_cast<Pos>(i + 1);
        k = from[c[i]];
        const Pos one = k > running_max ? 1 : 0;
        running_max = one != 0 ? k : running_max;
        runs += one & (prev_one ^ 1);
        prev_one = one;
    }
    return runs;
}

}  // namespace

SuffixRunKernel::SuffixRunKernel(std::string_view s) : s_(s) {
    std::array<int, 256> code{};
    code.fill(-1);
    unsigned sigma = 0;
    for (const char ch : s) {
        auto& slot = code[static_cast<unsigned char>(ch)];
        if (slot < 0) {
            if (sigma == kAutomatonMaxSigma) {
                return;
            }
            slot = static_cast<int>(sigma++);
        }
    }
    codes_.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        codes_[i] = static_cast<std::uint8_t>(code[static_cast<unsigned char>(s[i])]);
    }
    sigma_ = sigma <= 2 ? 2 : 4;
}

Pos SuffixRunKernel::one_runs(std::size_t start, std::vector<Pos>& scratch) const {
    if (sigma_ == 0) {
        return oc_one_runs(s_.substr(start), scratch);
    }
    const std::size_t n = s_.size() - start;
    if (n == 0) {
        return 0;
    }
    const std::uint8_t* c = codes_.data() + start;
    return sigma_ == 2 ? automaton_one_runs<2>(c, n, scratch) : automaton_one_runs<4>(c, n, scratch);
}

}  // namespace detail

std::vector<McsSpan> mcs_oracle(const Text& t) {
    require_nonempty(t, "mcs_oracle");
    const Pos n = t.size();
    const std::string_view s = t.view();
    std::vector<McsSpan> spans;
    std::vector<Pos> scratch;
    std::vector<std::uint8_t> above;
    std::vector<std::uint8_t> cur;
    for (Pos i = 1; i <= n; ++i) {
        detail::oc_bits(s.substr(i - 1), scratch, cur);
        detail::emit_from_suffix(i, n, cur, above, spans);
        above.swap(cur);
    }
    return spans;
}

std::uint64_t suffix_run_total(const Text& t) {
    require_nonempty(t, "suffix_run_total");
    const std::string_view s = t.view();
    std::uint64_t total = 0;
    const detail::SuffixRunKernel kernel(s);
    std::vector<Pos> scratch;
    for (std::size_t i = 0; i < s.size(); ++i) {
        total += kernel.one_runs(i, scratch);
    }
    return total;
}

}  // namespace mcs
