// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcs/text.hpp"

namespace mcs {

inline constexpr Pos kNoNode = std::numeric_limits<Pos>::max();

/// Edge key of the virtual end-of-text symbol. Byte b is keyed as b itself,
/// so the sentinel orders before every byte.
inline constexpr int kSentinelSymbol = -1;

struct SuffixTreeNode {
    Pos parent = kNoNode;
    Pos first_child = kNoNode;
    Pos next_sibling = kNoNode;
    /// String depth |L(v)|; for a leaf it counts the sentinel.
    Pos depth = 0;
    /// 1-based suffix start for leaves (n + 1 for the sentinel leaf), 0 for internal nodes.
    Pos suffix = 0;
    /// Start of some suffix below this node; anchors the edge label.
    Pos witness = 0;
};

/// Suffix tree of S$ with a virtual sentinel $. Node 0 is the root; children
/// are linked in edge-key order (sentinel first, then bytes ascending).
class SuffixTree {
public:
    [[nodiscard]] const Text& text() const noexcept { return text_; }
    [[nodiscard]] Pos root() const noexcept { return 0; }
    [[nodiscard]] Pos node_count() const noexcept { return static_cast<Pos>(nodes_.size()); }
    [[nodiscard]] Pos leaf_count() const noexcept { return text_.size() + 1; }
    [[nodiscard]] const SuffixTreeNode& node(Pos v) const { return nodes_.at(v); }
    [[nodiscard]] bool is_leaf(Pos v) const { return node(v).suffix != 0; }

    [[nodiscard]] std::vector<Pos> children(Pos v) const;
    [[nodiscard]] Pos degree(Pos v) const;

    /// First symbol on the edge into v (kSentinelSymbol or a byte). Root: kSentinelSymbol.
    [[nodiscard]] int edge_symbol(Pos v) const;
    /// Edge label into v as 1-based inclusive positions of S$ (position n + 1 is $).
    [[nodiscard]] std::pair<Pos, Pos> edge_label(Pos v) const;
    /// L(v) with the sentinel rendered as `sentinel`.
    [[nodiscard]] std::string path_label(Pos v, char sentinel = '$') const;

    /// Indented dump, one node per line: depth, edge label, leaf index.
    [[nodiscard]] std::string dump() const;

private:
    friend SuffixTree build_suffix_tree(const Text& t);

    Text text_;
    std::vector<SuffixTreeNode> nodes_;
};

/// Suffix array of S$ (0-based suffix starts; entry 0 is the sentinel suffix).
/// Prefix doubling with counting sorts, O(n log n).
std::vector<Pos> suffix_array(std::string_view s);

/// lcp[k] = LCP of suffixes sa[k-1] and sa[k]; lcp[0] = 0. Kasai et al.
std::vector<Pos> lcp_array(std::string_view s, const std::vector<Pos>& sa);

/// Builds the tree from the suffix array and LCP array. Throws
/// std::invalid_argument on empty text.
SuffixTree build_suffix_tree(const Text& t);

struct BinaryNode {
    Pos parent = kNoNode;
    Pos left = kNoNode;
    Pos right = kNoNode;
    /// Original suffix-tree node this node stands for (itself unless synthetic).
    Pos origin = kNoNode;
    /// String depth of `origin`.
    Pos depth = 0;
    Pos suffix = 0;
    bool synthetic = false;
};

/// Suffix tree in which every node of degree d > 2 is expanded into a balanced
/// binary tree of height ceil(log2 d). Original nodes keep their ids; synthetic
/// nodes are appended after them.
class BinarizedTree {
public:
    [[nodiscard]] const Text& text() const noexcept { return text_; }
    [[nodiscard]] Pos root() const noexcept { return 0; }
    [[nodiscard]] Pos node_count() const noexcept { return static_cast<Pos>(nodes_.size()); }
    [[nodiscard]] Pos original_node_count() const noexcept { return original_count_; }
    [[nodiscard]] const BinaryNode& node(Pos v) const { return nodes_.at(v); }
    [[nodiscard]] bool is_leaf(Pos v) const { return node(v).left == kNoNode; }

    /// Children of original node v in the unbinarized tree.
    [[nodiscard]] std::span<const Pos> original_children(Pos v) const;
    /// Synthetic nodes introduced for original node v, children before parents.
    [[nodiscard]] std::span<const Pos> synthetic_nodes(Pos v) const;

private:
    friend BinarizedTree binarize(const SuffixTree& tree);

    Text text_;
    std::vector<BinaryNode> nodes_;
    Pos original_count_ = 0;
    std::vector<Pos> child_offsets_;
    std::vector<Pos> child_ids_;
    std::vector<Pos> synthetic_offsets_;
    std::vector<Pos> synthetic_ids_;
};

BinarizedTree binarize(const SuffixTree& tree);

/// Visits every node exactly once, each after both of its children. Nodes of
/// one original node's binary expansion are visited together, after every
/// original child subtree has been finished. Iterative.
template <typename Visit>
void bottom_up(const BinarizedTree& tree, Visit&& visit) {
    struct Frame {
        Pos v;
        bool expanded;
    };
    std::vector<Frame> stack;
    stack.push_back({tree.root(), false});
    while (!stack.empty()) {
        Frame& top = stack.back();
        const Pos v = top.v;
        if (tree.is_leaf(v)) {
            stack.pop_back();
            visit(v);
            continue;
        }
        if (!top.expanded) {
            top.expanded = true;
            const auto kids = tree.original_children(v);
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
                stack.push_back({*it, false});
            }
            continue;
        }
        stack.pop_back();
        for (const Pos w : tree.synthetic_nodes(v)) {
            visit(w);
        }
        visit(v);
    }
}

}  // namespace mcs
