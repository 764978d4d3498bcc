// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mcs/strings_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mcs {

namespace {

void check_index(Pos i, Pos n) {
    if (i < 1 || i > n) {
        throw std::out_of_range("prefix index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n));
    }
}

}  // namespace

Pos BorderArray::at(Pos i) const {
    check_index(i, size());
    return values[i - 1];
}

Pos PArray::at(Pos i) const {
    check_index(i, size());
    return values[i - 1];
}

bool OCArray::at(Pos i) const {
    check_index(i, size());
    return bits[i - 1] != 0;
}

Pos OcRle::one_runs() const noexcept {
    Pos m = 0;
    for (const auto& r : runs) {
        m += r.bit ? 1 : 0;
    }
    return m;
}

namespace detail {

void border_values(std::string_view s, std::vector<Pos>& out) {
    const std::size_t n = s.size();
    out.resize(n);
    if (n == 0) {
        return;
    }
    out[0] = 0;
    Pos k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && s[i] != s[k]) {
            k = out[k - 1];
        }
        if (s[i] == s[k]) {
            ++k;
        }
        out[i] = k;
    }
}

void oc_bits(std::string_view s, std::vector<Pos>& border_scratch, std::vector<std::uint8_t>& out) {
    border_values(s, border_scratch);
    out.resize(s.size());
    Pos running_max = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const bool grows = i == 0 || border_scratch[i] > running_max;
        out[i] = grows ? 1 : 0;
        if (border_scratch[i] > running_max) {
            running_max = border_scratch[i];
        }
    }
}

Pos oc_one_runs(std::string_view s, std::vector<Pos>& border_scratch) {
    const std::size_t n = s.size();
    if (n == 0) {
        return 0;
    }
    border_scratch.resize(n);
    Pos* b = border_scratch.data();
    const auto* c = reinterpret_cast<const unsigned char*>(s.data());
    b[0] = 0;
    Pos k = 0;
    Pos running_max = 0;
    Pos runs = 1;
    bool prev_one = true;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && c[i] != c[k]) {
            k = b[k - 1];
        }
        if (c[i] == c[k]) {
            ++k;
        }
        b[i] = k;
        const bool one = k > running_max;
        if (one) {
            running_max = k;
            runs += prev_one ? 0 : 1;
        }
        prev_one = one;
    }
    return runs;
}

}  // namespace detail

BorderArray border_array(const Text& t) {
    BorderArray b;
    detail::border_values(t.view(), b.values);
    return b;
}

std::vector<Pos> borders_at(const BorderArray& b, Pos i) {
    check_index(i, b.size());
    std::vector<Pos> chain;
    Pos len = b.values[i - 1];
    chain.push_back(len);
    while (len > 0) {
        len = b.values[len - 1];
        chain.push_back(len);
    }
    return {chain.rbegin(), chain.rend()};
}

PArray p_array(const BorderArray& b) {
    PArray p;
    p.values.resize(b.values.size());
    Pos running_max = 0;
    for (std::size_t i = 0; i < b.values.size(); ++i) {
        running_max = std::max(running_max, b.values[i]);
        p.values[i] = running_max;
    }
    return p;
}

OCArray oc_array(const Text& t) {
    if (t.empty()) {
        throw std::invalid_argument("OC array of the empty string is undefined");
    }
    const PArray p = p_array(border_array(t));
    OCArray oc;
    oc.bits.resize(p.values.size());
    oc.bits[0] = 1;
    for (std::size_t i = 1; i < p.values.size(); ++i) {
        oc.bits[i] = static_cast<std::uint8_t>(p.values[i] - p.values[i - 1]);
    }
    return oc;
}

bool is_closed(const Text& t) {
    if (t.empty()) {
        throw std::invalid_argument("closedness of the empty string is undefined");
    }
    return oc_array(t).bits.back() != 0;
}

OcRle oc_runs(const OCArray& oc) {
    OcRle rle;
    for (const auto bit : oc.bits) {
        const bool b = bit != 0;
        if (!rle.runs.empty() && rle.runs.back().bit == b) {
            ++rle.runs.back().length;
        } else {
            rle.runs.push_back({b, 1});
        }
    }
    return rle;
}

Pos count_one_runs(const OCArray& oc) {
    Pos m = 0;
    std::uint8_t prev = 0;
    for (const auto bit : oc.bits) {
        if (bit != 0 && prev == 0) {
            ++m;
        }
        prev = bit;
    }
    return m;
}

}  // namespace mcs
