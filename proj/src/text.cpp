// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mcs/text.hpp"

#include <stdexcept>
#include <utility>

namespace mcs {

Text::Text(std::string bytes) : bytes_(std::move(bytes)) {
    if (bytes_.size() > kMaxTextLength) {
        throw std::length_error("text longer than 2^32 - 2 bytes");
    }
}

unsigned char Text::at(Pos p) const {
    if (p < 1 || p > size()) {
        throw std::out_of_range("text position " + std::to_string(p) + " outside 1.." +
                                std::to_string(size()));
    }
    return (*this)[p - 1];
}

Text Text::substr(Pos start, Pos end) const {
    if (start < 1 || start > end || end > size()) {
        throw std::out_of_range("substring [" + std::to_string(start) + ".." +
                                std::to_string(end) + "] outside 1.." + std::to_string(size()));
    }
    return Text(bytes_.substr(start - 1, end - start + 1));
}

Text Text::suffix(Pos start) const { return substr(start, size()); }

}  // namespace mcs
