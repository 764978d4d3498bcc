// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mcs/extremal.hpp"

#include <cmath>
#include <exception>
#include <iomanip>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "mcs/mcs_fast.hpp"
#include "mcs/oracle.hpp"
#include "mcs/strings_core.hpp"

namespace mcs {

Text extremal_string(Pos n) {
    if (n == 0) {
        throw std::invalid_argument("extremal_string: length must be positive");
    }
    std::string u = "a";
    u.reserve(static_cast<std::size_t>(n) * 2 + 2);
    for (std::size_t k = 1; u.size() < n; ++k) {
        u.push_back(u[k - 1] == 'a' ? 'b' : 'a');
        u += u.substr(0, k);
    }
    u.resize(n);
    return Text(std::move(u));
}

Pos triangular_count(Pos n) {
    // Largest k with k(k+1)/2 <= n, corrected for floating point.
    auto k = static_cast<std::uint64_t>((std::sqrt(8.0 * n + 1.0) - 1.0) / 2.0);
    while (k * (k + 1) / 2 > n) {
        --k;
    }
    while ((k + 1) * (k + 2) / 2 <= n) {
        ++k;
    }
    return static_cast<Pos>(k);
}

bool verify_extremal_oc(Pos n) {
    const OCArray oc = oc_array(extremal_string(n));
    std::uint64_t next_one = 1;
    std::uint64_t step = 2;
    for (Pos i = 1; i <= n; ++i) {
        const bool expect = i == next_one;
        if (expect) {
            next_one += step++;
        }
        if (oc.bits[i - 1] != (expect ? 1 : 0)) {
            return false;
        }
    }
    return true;
}

Text random_text(Pos n, std::string_view alphabet, std::uint64_t seed) {
    if (alphabet.empty()) {
        throw std::invalid_argument("random_text: empty alphabet");
    }
    std::mt19937_64 rng(seed);
    std::string s(n, '\0');
    for (auto& ch : s) {
        ch = alphabet[rng() % alphabet.size()];
    }
    return Text(std::move(s));
}

std::string letters(unsigned sigma) {
    if (sigma < 1 || sigma > 26) {
        throw std::invalid_argument("alphabet size must be in 1..26");
    }
    std::string out;
    for (unsigned k = 0; k < sigma; ++k) {
        out.push_back(static_cast<char>('a' + k));
    }
    return out;
}

double oc_run_bound(Pos n) { return 2.0 * std::sqrt(static_cast<double>(n)) + 2.0; }

double mcs_count_bound(Pos n) {
    const double m = static_cast<double>(n) + 1.0;
    return 4.0 / 3.0 * m * std::sqrt(m) + 2.0 * n + 4.0;
}

std::uint64_t count_mcs(const Text& t) {
    const Pos n = t.size();
    if (n > 2000) {
        return mcs_fast(t).size();
    }
    const std::uint64_t slow = mcs_oracle(t).size();
    if (n >= 1000) {
        const std::uint64_t fast = mcs_fast(t).size();
        if (fast != slow) {
            throw std::logic_error("mcs_fast and mcs_oracle disagree at n=" + std::to_string(n));
        }
    }
    return slow;
}

Text TextSource::generate(Pos n) const {
    return kind == Kind::extremal ? extremal_string(n) : random_text(n, letters(sigma), seed);
}

bool BoundRow::within_bounds() const noexcept {
    return mcs_count <= suffix_run_total &&
           static_cast<double>(suffix_run_total) <= bound_mcs &&
           static_cast<double>(oc_one_runs) <= bound_sqrt;
}

bool BoundReport::within_bounds() const noexcept {
    for (const auto& r : rows) {
        if (!r.within_bounds()) {
            return false;
        }
    }
    return true;
}

BoundReport bound_report(std::span<const Pos> lengths, const TextSource& source) {
    if (lengths.empty()) {
        throw std::invalid_argument("bound_report: no lengths");
    }
    for (const Pos n : lengths) {
        if (n == 0) {
            throw std::invalid_argument("bound_report: length must be positive");
        }
    }
    BoundReport report;
    report.rows.resize(lengths.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(lengths.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < count; ++k) {
        try {
            const Pos n = lengths[static_cast<std::size_t>(k)];
            const Text t = source.generate(n);
            BoundRow row;
            row.n = n;
            row.mcs_count = count_mcs(t);
            row.oc_one_runs = count_one_runs(oc_array(t));
            row.suffix_run_total = suffix_run_total(t);
            row.bound_sqrt = oc_run_bound(n);
            row.bound_mcs = mcs_count_bound(n);
            report.rows[static_cast<std::size_t>(k)] = row;
        } catch (...) {
#pragma omp critical(mcs_bound_report)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return report;
}

void write_tsv(std::ostream& os, const BoundReport& report) {
    os << "n\tmcs_count\toc_one_runs\tsuffix_run_total\tbound_sqrt\tbound_mcs\n";
    const auto flags = os.flags();
    const auto precision = os.precision();
    os << std::fixed << std::setprecision(3);
    for (const auto& r : report.rows) {
        os << r.n << '\t' << r.mcs_count << '\t' << r.oc_one_runs << '\t' << r.suffix_run_total
           << '\t' << r.bound_sqrt << '\t' << r.bound_mcs << '\n';
    }
    os.flags(flags);
    os.precision(precision);
}

}  // namespace mcs
