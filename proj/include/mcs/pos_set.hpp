// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mcs/text.hpp"

namespace mcs {

/// AVL tree of distinct text positions.
///
/// Nodes live in a per-set arena addressed by 32-bit indices; the tree never
/// deletes, so the arena only grows until the set is merged away.
class PosSet {
public:
    PosSet() = default;

    /// Throws std::invalid_argument if x is already present.
    void insert(Pos x);

    [[nodiscard]] bool contains(Pos x) const;
    /// Smallest element > x.
    [[nodiscard]] std::optional<Pos> succ(Pos x) const;
    /// Largest element < x.
    [[nodiscard]] std::optional<Pos> pred(Pos x) const;

    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] bool empty() const noexcept { return nodes_.empty(); }
    /// Height of the tree; 0 for the empty set.
    [[nodiscard]] int height() const noexcept;

    /// In-order visit.
    template <typename F>
    void for_each(F&& f) const {
        std::vector<std::int32_t> stack;
        std::int32_t cur = root_;
        while (cur != kNil || !stack.empty()) {
            while (cur != kNil) {
                stack.push_back(cur);
                cur = nodes_[static_cast<std::size_t>(cur)].left;
            }
            cur = stack.back();
            stack.pop_back();
            f(nodes_[static_cast<std::size_t>(cur)].key);
            cur = nodes_[static_cast<std::size_t>(cur)].right;
        }
    }

    [[nodiscard]] std::vector<Pos> to_vector() const;

    /// Union of two disjoint sets: every element of the smaller one is
    /// inserted into the larger one. Throws std::invalid_argument on overlap.
    static PosSet merge(PosSet a, PosSet b);

    /// Checks ordering, AVL balance and cached heights. For tests.
    [[nodiscard]] bool valid() const;

private:
    static constexpr std::int32_t kNil = -1;

    struct Node {
        Pos key;
        std::int32_t left = kNil;
        std::int32_t right = kNil;
        std::int32_t height = 1;
    };

    [[nodiscard]] std::int32_t h(std::int32_t v) const noexcept {
        return v == kNil ? 0 : nodes_[static_cast<std::size_t>(v)].height;
    }
    void update(std::int32_t v) noexcept;
    std::int32_t rotate_left(std::int32_t v) noexcept;
    std::int32_t rotate_right(std::int32_t v) noexcept;
    std::int32_t rebalance(std::int32_t v) noexcept;

    std::vector<Node> nodes_;
    std::int32_t root_ = kNil;
};

/// Preceding-character class of an occurrence: kBeginClass for position 1,
/// otherwise 1 + the byte before it.
using CharClass = std::uint16_t;
inline constexpr CharClass kBeginClass = 0;

/// Class of 1-based position p in t.
[[nodiscard]] inline CharClass class_of(const Text& t, Pos p) noexcept {
    return p == 1 ? kBeginClass : static_cast<CharClass>(t[p - 2] + 1);
}

/// Positions partitioned by preceding-character class. Only nonempty classes
/// are stored, in ascending class order (BEGIN first).
class ClassedPosSets {
public:
    using Entry = std::pair<CharClass, PosSet>;

    ClassedPosSets() = default;

    void insert(CharClass c, Pos p);

    [[nodiscard]] std::size_t total() const noexcept { return total_; }
    [[nodiscard]] bool empty() const noexcept { return total_ == 0; }
    [[nodiscard]] const std::vector<Entry>& classes() const noexcept { return classes_; }
    [[nodiscard]] const PosSet* find(CharClass c) const noexcept;

    /// Nearest element > x over all classes.
    [[nodiscard]] std::optional<Pos> succ(Pos x) const;

    /// Every position in ascending order.
    [[nodiscard]] std::vector<Pos> positions() const;

    /// Class-by-class union, smaller PosSet of each class into the larger.
    static ClassedPosSets merge(ClassedPosSets a, ClassedPosSets b);

private:
    std::vector<Entry> classes_;
    std::size_t total_ = 0;
};

}  // namespace mcs
