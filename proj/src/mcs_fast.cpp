// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mcs/mcs_fast.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mcs/suffix_tree.hpp"

namespace mcs {

std::vector<McsSpan> singleton_mcs(const Text& t) {
    if (t.empty()) {
        throw std::invalid_argument("singleton_mcs: empty text");
    }
    const Pos n = t.size();
    std::vector<McsSpan> out;
    for (Pos k = 0; k < n; ++k) {
        const bool left_differs = k == 0 || t[k - 1] != t[k];
        const bool right_differs = k + 1 == n || t[k] != t[k + 1];
        if (left_differs && right_differs) {
            out.push_back({k + 1, k + 1});
        }
    }
    return out;
}

std::vector<CandidatePair> pairs_at_node(const ClassedPosSets& smaller,
                                         const ClassedPosSets& larger, Pos depth) {
    std::vector<CandidatePair> out;
    for (const auto& [cls, set] : smaller.classes()) {
        set.for_each([&](Pos e) {
            std::optional<Pos> next;
            std::optional<Pos> prev;
            for (const auto& [other_cls, other] : larger.classes()) {
                if (other_cls == cls) {
                    continue;
                }
                if (const auto s = other.succ(e); s && (!next || *s < *next)) {
                    next = s;
                }
                if (const auto p = other.pred(e); p && (!prev || *p > *prev)) {
                    prev = p;
                }
            }
            if (prev) {
                out.push_back({*prev, e, depth});
            }
            if (next) {
                out.push_back({e, *next, depth});
            }
        });
    }
    return out;
}

std::vector<CandidatePair> filter_consecutive(std::span<const CandidatePair> cands,
                                              std::span<const ClassedPosSets* const> occurrences) {
    std::vector<CandidatePair> kept;
    for (const auto& c : cands) {
        std::optional<Pos> next;
        for (const auto* sets : occurrences) {
            if (const auto s = sets->succ(c.p); s && (!next || *s < *next)) {
                next = s;
            }
        }
        if (next && *next == c.q) {
            kept.push_back(c);
        }
    }
    return kept;
}

std::vector<McsSpan> mcs_fast(const Text& t, McsFastStats* stats) {
    if (t.empty()) {
        throw std::invalid_argument("mcs_fast: empty text");
    }
    const Pos n = t.size();
    McsFastStats local;
    std::vector<McsSpan> spans = singleton_mcs(t);
    local.singletons = spans.size();

    const BinarizedTree tree = binarize(build_suffix_tree(t));

    // Occurrence sets of every node whose parent has not been processed yet.
    std::unordered_map<Pos, ClassedPosSets> live;
    live.reserve(1024);

    // The binary expansion of one original node v is processed as a group.
    // Consecutiveness must hold among all occurrences of L(v), so the filter
    // looks at every set still pending inside the group, not just the two
    // operands of the current binary node.
    Pos group_origin = kNoNode;
    std::vector<Pos> group;
    std::vector<const ClassedPosSets*> occurrences;

    bottom_up(tree, [&](Pos v) {
        const BinaryNode& node = tree.node(v);
        if (node.left == kNoNode) {
            ClassedPosSets leaf;
            if (node.suffix <= n) {
                leaf.insert(class_of(t, node.suffix), node.suffix);
            }
            live.emplace(v, std::move(leaf));
            return;
        }
        if (node.depth == 0) {
            // Root group: the empty label has no MCS.
            live.erase(node.left);
            live.erase(node.right);
            live.emplace(v, ClassedPosSets{});
            return;
        }
        if (group_origin != node.origin) {
            group_origin = node.origin;
            const auto kids = tree.original_children(node.origin);
            group.assign(kids.begin(), kids.end());
        }

        ClassedPosSets& a = live.at(node.left);
        ClassedPosSets& b = live.at(node.right);
        const bool a_smaller = a.total() <= b.total();
        const ClassedPosSets& smaller = a_smaller ? a : b;
        const ClassedPosSets& larger = a_smaller ? b : a;
        local.smaller_half_work += smaller.total();

        const auto cands = pairs_at_node(smaller, larger, node.depth);
        local.candidates += cands.size();
        if (!cands.empty()) {
            occurrences.clear();
            for (const Pos g : group) {
                occurrences.push_back(&live.at(g));
            }
            for (const auto& c : filter_consecutive(cands, occurrences)) {
                spans.push_back({c.p, c.q + c.depth - 1});
                ++local.pairs_emitted;
            }
        }

        ClassedPosSets merged = ClassedPosSets::merge(std::move(a), std::move(b));
        live.erase(node.left);
        live.erase(node.right);
        live.emplace(v, std::move(merged));
        std::erase_if(group, [&](Pos g) { return g == node.left || g == node.right; });
        group.push_back(v);
    });

    std::sort(spans.begin(), spans.end());
    const auto dup = std::adjacent_find(spans.begin(), spans.end());
    if (dup != spans.end()) {
        throw std::logic_error("mcs_fast emitted span (" + std::to_string(dup->start) + "," +
                               std::to_string(dup->end) + ") twice");
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return spans;
}

}  // namespace mcs
