// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mcs/suffix_tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mcs {

std::vector<Pos> suffix_array(std::string_view s) {
    // Sorting the cyclic shifts of S$ sorts its suffixes because $ is unique
    // and smallest.
    const std::size_t total = s.size() + 1;
    std::vector<Pos> sa(total);
    std::vector<Pos> cls(total);
    std::vector<Pos> shifted(total);
    std::vector<Pos> next_cls(total);
    std::vector<Pos> count(std::max<std::size_t>(257, total), 0);

    auto symbol = [&](std::size_t i) -> Pos {
        return i == s.size() ? 0 : static_cast<Pos>(static_cast<unsigned char>(s[i])) + 1;
    };
    for (std::size_t i = 0; i < total; ++i) {
        ++count[symbol(i)];
    }
    for (std::size_t c = 1; c < 257; ++c) {
        count[c] += count[c - 1];
    }
    for (std::size_t i = total; i-- > 0;) {
        sa[--count[symbol(i)]] = static_cast<Pos>(i);
    }
    Pos classes = 1;
    cls[sa[0]] = 0;
    for (std::size_t i = 1; i < total; ++i) {
        if (symbol(sa[i]) != symbol(sa[i - 1])) {
            ++classes;
        }
        cls[sa[i]] = classes - 1;
    }

    for (std::size_t half = 1; half < total && classes < total; half <<= 1) {
        for (std::size_t i = 0; i < total; ++i) {
            shifted[i] = static_cast<Pos>((sa[i] + total - half) % total);
        }
        std::fill(count.begin(), count.begin() + classes, 0);
        for (std::size_t i = 0; i < total; ++i) {
            ++count[cls[shifted[i]]];
        }
        for (std::size_t c = 1; c < classes; ++c) {
            count[c] += count[c - 1];
        }
        for (std::size_t i = total; i-- > 0;) {
            sa[--count[cls[shifted[i]]]] = shifted[i];
        }
        next_cls[sa[0]] = 0;
        classes = 1;
        for (std::size_t i = 1; i < total; ++i) {
            const Pos a = sa[i];
            const Pos b = sa[i - 1];
            if (cls[a] != cls[b] || cls[(a + half) % total] != cls[(b + half) % total]) {
                ++classes;
            }
            next_cls[a] = classes - 1;
        }
        cls.swap(next_cls);
    }
    return sa;
}

std::vector<Pos> lcp_array(std::string_view s, const std::vector<Pos>& sa) {
    const std::size_t total = sa.size();
    std::vector<Pos> rank(total);
    for (std::size_t k = 0; k < total; ++k) {
        rank[sa[k]] = static_cast<Pos>(k);
    }
    std::vector<Pos> lcp(total, 0);
    std::size_t h = 0;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < total; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) {
            ++h;
        }
        lcp[rank[i]] = static_cast<Pos>(h);
        if (h > 0) {
            --h;
        }
    }
    return lcp;
}

SuffixTree build_suffix_tree(const Text& t) {
    if (t.empty()) {
        throw std::invalid_argument("suffix tree of the empty text");
    }
    const std::string_view s = t.view();
    const Pos n = t.size();
    const std::vector<Pos> sa = suffix_array(s);
    const std::vector<Pos> lcp = lcp_array(s, sa);

    SuffixTree tree;
    tree.text_ = t;
    auto& nodes = tree.nodes_;
    nodes.reserve(2 * static_cast<std::size_t>(n) + 2);
    std::vector<Pos> last_child;
    last_child.reserve(nodes.capacity());

    auto make = [&](Pos depth, Pos suffix, Pos witness) {
        nodes.push_back({kNoNode, kNoNode, kNoNode, depth, suffix, witness});
        last_child.push_back(kNoNode);
        return static_cast<Pos>(nodes.size() - 1);
    };
    auto attach = [&](Pos parent, Pos child) {
        nodes[child].parent = parent;
        if (last_child[parent] == kNoNode) {
            nodes[parent].first_child = child;
        } else {
            nodes[last_child[parent]].next_sibling = child;
        }
        last_child[parent] = child;
    };

    // LCP-interval construction: a node is attached to its parent when it is
    // popped, which happens in suffix-array order, so siblings end up sorted.
    std::vector<Pos> stack;
    stack.push_back(make(0, 0, 1));
    for (std::size_t k = 0; k <= sa.size(); ++k) {
        const Pos l = k < sa.size() ? lcp[k] : 0;
        while (nodes[stack.back()].depth > l) {
            const Pos last = stack.back();
            stack.pop_back();
            const Pos top_depth = nodes[stack.back()].depth;
            if (top_depth >= l) {
                attach(stack.back(), last);
            } else {
                const Pos inner = make(l, 0, nodes[last].witness);
                attach(inner, last);
                stack.push_back(inner);
            }
        }
        if (k < sa.size()) {
            const Pos start = sa[k] + 1;
            stack.push_back(make(n + 2 - start, start, start));
        }
    }
    return tree;
}

std::vector<Pos> SuffixTree::children(Pos v) const {
    std::vector<Pos> out;
    for (Pos c = node(v).first_child; c != kNoNode; c = nodes_[c].next_sibling) {
        out.push_back(c);
    }
    return out;
}

Pos SuffixTree::degree(Pos v) const {
    Pos d = 0;
    for (Pos c = node(v).first_child; c != kNoNode; c = nodes_[c].next_sibling) {
        ++d;
    }
    return d;
}

int SuffixTree::edge_symbol(Pos v) const {
    const auto& nd = node(v);
    if (nd.parent == kNoNode) {
        return kSentinelSymbol;
    }
    const Pos at = nd.witness + nodes_[nd.parent].depth;  // 1-based into S$
    return at > text_.size() ? kSentinelSymbol : static_cast<int>(text_[at - 1]);
}

std::pair<Pos, Pos> SuffixTree::edge_label(Pos v) const {
    const auto& nd = node(v);
    const Pos parent_depth = nd.parent == kNoNode ? 0 : nodes_[nd.parent].depth;
    return {nd.witness + parent_depth, nd.witness + nd.depth - 1};
}

std::string SuffixTree::path_label(Pos v, char sentinel) const {
    const auto& nd = node(v);
    std::string out;
    out.reserve(nd.depth);
    for (Pos k = 0; k < nd.depth; ++k) {
        const Pos at = nd.witness + k;
        out.push_back(at > text_.size() ? sentinel : static_cast<char>(text_[at - 1]));
    }
    return out;
}

std::string SuffixTree::dump() const {
    std::ostringstream os;
    std::vector<std::pair<Pos, int>> stack{{root(), 0}};
    while (!stack.empty()) {
        const auto [v, level] = stack.back();
        stack.pop_back();
        const auto& nd = nodes_[v];
        os << std::string(static_cast<std::size_t>(level) * 2, ' ') << nd.depth;
        if (nd.parent != kNoNode) {
            const auto [from, to] = edge_label(v);
            os << ' ';
            for (Pos at = from; at <= to; ++at) {
                os << (at > text_.size() ? '$' : static_cast<char>(text_[at - 1]));
            }
        }
        if (nd.suffix != 0) {
            os << " [" << nd.suffix << ']';
        }
        os << '\n';
        const auto kids = children(v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.emplace_back(*it, level + 1);
        }
    }
    return os.str();
}

BinarizedTree binarize(const SuffixTree& tree) {
    BinarizedTree out;
    out.text_ = tree.text();
    const Pos count = tree.node_count();
    out.original_count_ = count;
    out.nodes_.resize(count);
    out.child_offsets_.assign(static_cast<std::size_t>(count) + 1, 0);
    out.synthetic_offsets_.assign(static_cast<std::size_t>(count) + 1, 0);
    out.child_ids_.reserve(count);

    for (Pos v = 0; v < count; ++v) {
        const auto& src = tree.node(v);
        auto& dst = out.nodes_[v];
        dst.origin = v;
        dst.depth = src.depth;
        dst.suffix = src.suffix;
        for (Pos c = src.first_child; c != kNoNode; c = tree.node(c).next_sibling) {
            out.child_ids_.push_back(c);
        }
        out.child_offsets_[v + 1] = static_cast<Pos>(out.child_ids_.size());
    }

    // Balanced expansion of a child range under `top` (the original node at
    // the outermost level, a fresh synthetic node below it).
    auto build = [&out](auto& self, std::span<const Pos> kids, Pos top, Pos origin) -> Pos {
        if (kids.size() == 1) {
            return kids[0];
        }
        if (top == kNoNode) {
            top = static_cast<Pos>(out.nodes_.size());
            BinaryNode syn;
            syn.origin = origin;
            syn.depth = out.nodes_[origin].depth;
            syn.synthetic = true;
            out.nodes_.push_back(syn);
        }
        const std::size_t mid = kids.size() / 2;
        const Pos l = self(self, kids.first(mid), kNoNode, origin);
        const Pos r = self(self, kids.subspan(mid), kNoNode, origin);
        out.nodes_[top].left = l;
        out.nodes_[top].right = r;
        out.nodes_[l].parent = top;
        out.nodes_[r].parent = top;
        if (top != origin) {
            out.synthetic_ids_.push_back(top);
        }
        return top;
    };

    for (Pos v = 0; v < count; ++v) {
        const auto begin = out.child_offsets_[v];
        const auto end = out.child_offsets_[v + 1];
        if (end > begin) {
            build(build, std::span<const Pos>(out.child_ids_).subspan(begin, end - begin), v, v);
        }
        out.synthetic_offsets_[v + 1] = static_cast<Pos>(out.synthetic_ids_.size());
    }
    return out;
}

std::span<const Pos> BinarizedTree::original_children(Pos v) const {
    if (v >= original_count_) {
        return {};
    }
    return std::span<const Pos>(child_ids_).subspan(child_offsets_[v],
                                                    child_offsets_[v + 1] - child_offsets_[v]);
}

std::span<const Pos> BinarizedTree::synthetic_nodes(Pos v) const {
    if (v >= original_count_) {
        return {};
    }
    return std::span<const Pos>(synthetic_ids_)
        .subspan(synthetic_offsets_[v], synthetic_offsets_[v + 1] - synthetic_offsets_[v]);
}

}  // namespace mcs
