// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace mcs {

/// A text position or length. Positions crossing the public API are 1-based.
using Pos = std::uint32_t;

/// Largest supported text length; n + 1 leaves must still be addressable.
inline constexpr std::size_t kMaxTextLength = 0xFFFFFFFEu;

/// Immutable byte string, the subject of every computation in this library.
///
/// Bytes are compared by value; all 256 byte values are legal. Storage is
/// 0-based (`operator[]`), while `at`, `substr` and `suffix` take 1-based
/// positions.
class Text {
public:
    Text() = default;
    explicit Text(std::string bytes);
    explicit Text(std::string_view bytes) : Text(std::string(bytes)) {}
    explicit Text(const char* bytes) : Text(std::string(bytes)) {}

    [[nodiscard]] Pos size() const noexcept { return static_cast<Pos>(bytes_.size()); }
    [[nodiscard]] bool empty() const noexcept { return bytes_.empty(); }
    [[nodiscard]] std::string_view view() const noexcept { return bytes_; }
    [[nodiscard]] const std::string& str() const noexcept { return bytes_; }

    /// 0-based, unchecked.
    [[nodiscard]] unsigned char operator[](std::size_t k) const noexcept {
        return static_cast<unsigned char>(bytes_[k]);
    }

    /// 1-based, throws std::out_of_range.
    [[nodiscard]] unsigned char at(Pos p) const;

    /// S[start..end], 1-based inclusive.
    [[nodiscard]] Text substr(Pos start, Pos end) const;
    /// S[start..n].
    [[nodiscard]] Text suffix(Pos start) const;

    friend bool operator==(const Text&, const Text&) = default;

private:
    std::string bytes_;
};

}  // namespace mcs
