#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "treepat/tree.hpp"

namespace treepat {

namespace detail {
struct PatternNode;
}

// Tree pattern: a binary tree whose leaves are either blanks (match any
// subtree) or terminal leaves (match only a leaf vertex). Occurrences are
// contiguous: a pattern occurs at a vertex when the pattern's shape embeds
// there with every pattern edge realized by a tree edge.
class TreePattern {
public:
    enum class Kind { Blank, TerminalLeaf, Internal };

    // A single blank.
    TreePattern() = default;

    static TreePattern blank() { return TreePattern(); }
    static TreePattern terminal_leaf();
    static TreePattern internal(const TreePattern& left,
                                const TreePattern& right);

    Kind kind() const;
    bool is_blank() const { return kind() == Kind::Blank; }
    bool is_terminal_leaf() const { return kind() == Kind::TerminalLeaf; }
    bool is_internal() const { return kind() == Kind::Internal; }

    const TreePattern& left() const;
    const TreePattern& right() const;

    // Leaves of the underlying tree shape (blanks and terminal leaves both
    // count as leaves).
    int leaf_count() const;
    int blank_count() const;

    // Word form: blank -> "L", terminal leaf -> "()", internal -> "(lr)".
    std::string word() const;

    bool operator==(const TreePattern& other) const;
    bool operator!=(const TreePattern& other) const { return !(*this == other); }

    // Total order compatible with word(); used for canonical containers.
    bool operator<(const TreePattern& other) const { return word() < other.word(); }

private:
    std::shared_ptr<const detail::PatternNode> node_;
};

namespace detail {
struct PatternNode {
    bool internal;
    TreePattern left, right;
    int leaves;
    PatternNode() : internal(false), leaves(1) {}
    PatternNode(const TreePattern& l, const TreePattern& r);
};
}

inline TreePattern TreePattern::terminal_leaf() {
    TreePattern p;
    p.node_ = std::make_shared<const detail::PatternNode>();
    return p;
}

inline TreePattern TreePattern::internal(const TreePattern& left,
                                         const TreePattern& right) {
    TreePattern p;
    p.node_ = std::make_shared<const detail::PatternNode>(left, right);
    return p;
}

inline TreePattern::Kind TreePattern::kind() const {
    if (!node_) return Kind::Blank;
    return node_->internal ? Kind::Internal : Kind::TerminalLeaf;
}

inline int TreePattern::leaf_count() const {
    return node_ && node_->internal ? node_->leaves : 1;
}

inline detail::PatternNode::PatternNode(const TreePattern& l,
                                        const TreePattern& r)
    : internal(true),
      left(l),
      right(r),
      leaves(l.leaf_count() + r.leaf_count()) {}

// Parses "L" | "()" | "(" P P ")". Whitespace between tokens is ignored.
TreePattern parse_pattern(const std::string& text);

// The all-blank pattern with the shape of t.
TreePattern pattern_of(const BinaryTree& t);

// Converts a pattern with no blanks to the tree of the same shape
// (terminal leaves become leaves). Throws DomainError if a blank remains.
BinaryTree pattern_to_tree(const TreePattern& p);

// The underlying tree shape of any pattern: blanks and terminal leaves both
// become leaves.
BinaryTree pattern_shape(const TreePattern& p);

// True when p occurs at the root of t.
bool matches(const BinaryTree& t, const TreePattern& p);

// Number of vertices of t at which p occurs.
std::int64_t count_copies(const BinaryTree& t, const TreePattern& p);

// As count_copies, but caches per-node totals in `memo`; nodes shared
// between trees (as produced by all_trees) are then counted only once.
std::int64_t count_copies(const BinaryTree& t, const TreePattern& p,
                          std::unordered_map<const void*, std::int64_t>& memo);

bool avoids(const BinaryTree& t, const TreePattern& p);

// The pattern matched by exactly the trees matching both p and q, or
// nullopt when no tree matches both. Blank is the identity; a terminal
// leaf meeting an internal pattern is empty.
std::optional<TreePattern> intersect(const TreePattern& p, const TreePattern& q);

// Edge length of the longest root path: Blank and TerminalLeaf have depth
// 0, an internal pattern 1 + max of its children's depths.
int depth(const TreePattern& p);

// Root paths of the blanks in left-to-right order, each a string over
// {'l','r'} ('' for the root).
std::vector<std::string> blank_paths(const TreePattern& p);

// When p occurs at the root of t, the subtrees of t filling p's blanks in
// left-to-right order; nullopt otherwise.
std::optional<std::vector<BinaryTree>> match_capture(const BinaryTree& t,
                                                     const TreePattern& p);

// Replaces p's blanks left-to-right by the given subtrees.
BinaryTree substitute(const TreePattern& p, const std::vector<BinaryTree>& fill);

}  // namespace treepat
