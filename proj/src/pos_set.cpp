// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mcs/pos_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mcs {

void PosSet::update(std::int32_t v) noexcept {
    auto& n = nodes_[static_cast<std::size_t>(v)];
    n.height = 1 + std::max(h(n.left), h(n.right));
}

std::int32_t PosSet::rotate_left(std::int32_t v) noexcept {
    const std::int32_t r = nodes_[static_cast<std::size_t>(v)].right;
    nodes_[static_cast<std::size_t>(v)].right = nodes_[static_cast<std::size_t>(r)].left;
    nodes_[static_cast<std::size_t>(r)].left = v;
    update(v);
    update(r);
    return r;
}

std::int32_t PosSet::rotate_right(std::int32_t v) noexcept {
    const std::int32_t l = nodes_[static_cast<std::size_t>(v)].left;
    nodes_[static_cast<std::size_t>(v)].left = nodes_[static_cast<std::size_t>(l)].right;
    nodes_[static_cast<std::size_t>(l)].right = v;
    update(v);
    update(l);
    return l;
}

std::int32_t PosSet::rebalance(std::int32_t v) noexcept {
    update(v);
    auto& n = nodes_[static_cast<std::size_t>(v)];
    const std::int32_t balance = h(n.left) - h(n.right);
    if (balance > 1) {
        const auto& l = nodes_[static_cast<std::size_t>(n.left)];
        if (h(l.left) < h(l.right)) {
            n.left = rotate_left(n.left);
        }
        return rotate_right(v);
    }
    if (balance < -1) {
        const auto& r = nodes_[static_cast<std::size_t>(n.right)];
        if (h(r.right) < h(r.left)) {
            n.right = rotate_right(n.right);
        }
        return rotate_left(v);
    }
    return v;
}

void PosSet::insert(Pos x) {
    // Record the descent, attach the new leaf, then rebalance bottom-up.
    std::int32_t path[96];
    int depth = 0;
    std::int32_t cur = root_;
    while (cur != kNil) {
        const auto& n = nodes_[static_cast<std::size_t>(cur)];
        if (x == n.key) {
            throw std::invalid_argument("position " + std::to_string(x) + " already in set");
        }
        path[depth++] = cur;
        cur = x < n.key ? n.left : n.right;
    }
    const auto fresh = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(Node{x});

    std::int32_t child = fresh;
    while (depth > 0) {
        const std::int32_t v = path[--depth];
        auto& n = nodes_[static_cast<std::size_t>(v)];
        if (x < n.key) {
            n.left = child;
        } else {
            n.right = child;
        }
        const std::int32_t old_height = n.height;
        child = rebalance(v);
        if (child == v && nodes_[static_cast<std::size_t>(v)].height == old_height) {
            // Subtree shape unchanged above this point.
            return;
        }
    }
    root_ = child;
}

bool PosSet::contains(Pos x) const {
    std::int32_t cur = root_;
    while (cur != kNil) {
        const auto& n = nodes_[static_cast<std::size_t>(cur)];
        if (x == n.key) {
            return true;
        }
        cur = x < n.key ? n.left : n.right;
    }
    return false;
}

std::optional<Pos> PosSet::succ(Pos x) const {
    std::optional<Pos> best;
    std::int32_t cur = root_;
    while (cur != kNil) {
        const auto& n = nodes_[static_cast<std::size_t>(cur)];
        if (n.key > x) {
            best = n.key;
            cur = n.left;
        } else {
            cur = n.right;
        }
    }
    return best;
}

std::optional<Pos> PosSet::pred(Pos x) const {
    std::optional<Pos> best;
    std::int32_t cur = root_;
    while (cur != kNil) {
        const auto& n = nodes_[static_cast<std::size_t>(cur)];
        if (n.key < x) {
            best = n.key;
            cur = n.right;
        } else {
            cur = n.left;
        }
    }
    return best;
}

int PosSet::height() const noexcept { return h(root_); }

std::vector<Pos> PosSet::to_vector() const {
    std::vector<Pos> out;
    out.reserve(size());
    for_each([&out](Pos x) { out.push_back(x); });
    return out;
}

PosSet PosSet::merge(PosSet a, PosSet b) {
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    // Arena order is irrelevant to the result, so skip the in-order walk.
    for (const auto& n : b.nodes_) {
        a.insert(n.key);
    }
    return a;
}

bool PosSet::valid() const {
    struct Frame {
        std::int32_t v;
        bool has_lo;
        Pos lo;
        bool has_hi;
        Pos hi;
    };
    std::size_t seen = 0;
    std::vector<Frame> stack;
    if (root_ != kNil) {
        stack.push_back({root_, false, 0, false, 0});
    }
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        const auto& n = nodes_[static_cast<std::size_t>(f.v)];
        ++seen;
        if ((f.has_lo && n.key <= f.lo) || (f.has_hi && n.key >= f.hi)) {
            return false;
        }
        if (n.height != 1 + std::max(h(n.left), h(n.right))) {
            return false;
        }
        if (std::abs(h(n.left) - h(n.right)) > 1) {
            return false;
        }
        if (n.left != kNil) {
            stack.push_back({n.left, f.has_lo, f.lo, true, n.key});
        }
        if (n.right != kNil) {
            stack.push_back({n.right, true, n.key, f.has_hi, f.hi});
        }
    }
    return seen == nodes_.size();
}

void ClassedPosSets::insert(CharClass c, Pos p) {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), c,
                               [](const Entry& e, CharClass k) { return e.first < k; });
    if (it == classes_.end() || it->first != c) {
        it = classes_.insert(it, Entry{c, PosSet{}});
    }
    it->second.insert(p);
    ++total_;
}

const PosSet* ClassedPosSets::find(CharClass c) const noexcept {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), c,
                               [](const Entry& e, CharClass k) { return e.first < k; });
    return (it != classes_.end() && it->first == c) ? &it->second : nullptr;
}

std::optional<Pos> ClassedPosSets::succ(Pos x) const {
    std::optional<Pos> best;
    for (const auto& [c, set] : classes_) {
        const auto s = set.succ(x);
        if (s && (!best || *s < *best)) {
            best = s;
        }
    }
    return best;
}

std::vector<Pos> ClassedPosSets::positions() const {
    std::vector<Pos> out;
    out.reserve(total_);
    for (const auto& [c, set] : classes_) {
        set.for_each([&out](Pos x) { out.push_back(x); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassedPosSets ClassedPosSets::merge(ClassedPosSets a, ClassedPosSets b) {
    ClassedPosSets out;
    out.total_ = a.total_ + b.total_;
    out.classes_.reserve(a.classes_.size() + b.classes_.size());
    auto ia = a.classes_.begin();
    auto ib = b.classes_.begin();
    while (ia != a.classes_.end() || ib != b.classes_.end()) {
        if (ib == b.classes_.end() || (ia != a.classes_.end() && ia->first < ib->first)) {
            out.classes_.push_back(std::move(*ia++));
        } else if (ia == a.classes_.end() || ib->first < ia->first) {
            out.classes_.push_back(std::move(*ib++));
        } else {
            out.classes_.emplace_back(ia->first,
                                      PosSet::merge(std::move(ia->second), std::move(ib->second)));
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace mcs
