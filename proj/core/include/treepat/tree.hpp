#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "treepat/errors.hpp"
#include "treepat/numbers.hpp"

namespace treepat {

namespace detail {
struct TreeNode;
}

// Rooted binary tree in which every internal vertex has exactly two ordered
// children. A default-constructed value is the single-leaf tree. Internal
// vertices are immutable and reference-counted, so subtrees are shared
// freely; equality is structural.
class BinaryTree {
public:
    BinaryTree() = default;
    BinaryTree(const BinaryTree& left, const BinaryTree& right);

    static BinaryTree leaf() { return BinaryTree(); }

    bool is_leaf() const { return node_ == nullptr; }

    const BinaryTree& left() const;
    const BinaryTree& right() const;

    int leaf_count() const;
    int vertex_count() const { return 2 * leaf_count() - 1; }

    // Parenthesis word: leaf -> "()", internal -> "(" left right ")".
    std::string word() const;

    bool operator==(const BinaryTree& other) const;
    bool operator!=(const BinaryTree& other) const { return !(*this == other); }

    // Identity of the shared node (nullptr for leaves); distinct internal
    // vertices created separately have distinct ids. Suitable as a
    // memoization key when trees share structure.
    const void* node_id() const { return node_.get(); }

private:
    std::shared_ptr<const detail::TreeNode> node_;

    friend struct TreeHash;
};

namespace detail {
struct TreeNode {
    BinaryTree left, right;
    int leaves;
    TreeNode(const BinaryTree& l, const BinaryTree& r);
};
}

inline int BinaryTree::leaf_count() const { return node_ ? node_->leaves : 1; }

inline const BinaryTree& BinaryTree::left() const {
    if (!node_) throw DomainError("leaf has no children");
    return node_->left;
}

inline const BinaryTree& BinaryTree::right() const {
    if (!node_) throw DomainError("leaf has no children");
    return node_->right;
}

inline detail::TreeNode::TreeNode(const BinaryTree& l, const BinaryTree& r)
    : left(l), right(r), leaves(l.leaf_count() + r.leaf_count()) {}

inline BinaryTree::BinaryTree(const BinaryTree& left, const BinaryTree& right)
    : node_(std::make_shared<const detail::TreeNode>(left, right)) {}

struct TreeHash {
    std::size_t operator()(const BinaryTree& t) const {
        return std::hash<const void*>()(t.node_.get());
    }
};

// Rooted plane tree with arbitrarily many ordered children per vertex.
struct GeneralTree {
    std::vector<GeneralTree> children;

    int vertex_count() const {
        int n = 1;
        for (const auto& c : children) n += c.vertex_count();
        return n;
    }

    // Parenthesis word: "(" child words ")".
    std::string word() const;

    bool operator==(const GeneralTree&) const = default;
};

// Position of a tree in the canonical enumeration: `index` is 1-based within
// the list of all trees having `leaves` leaves.
struct TreeIndex {
    int leaves = 1;
    std::int64_t index = 1;
};

// Parses the parenthesis word of a binary tree. Whitespace between tokens is
// ignored. Throws ParseError naming the byte offset of the first problem.
BinaryTree parse_tree(const std::string& text);

// Parses the parenthesis word of a general plane tree.
GeneralTree parse_general_tree(const std::string& text);

// All binary trees with n leaves, in canonical order: the list for n is the
// concatenation over k = 1..n-1 of {(l, r) : l has k leaves, r has n-k
// leaves}, with l varying slower than r, both in canonical order. Cached;
// the returned reference stays valid for the life of the process.
const std::vector<BinaryTree>& all_trees(int leaves);

// Rank of t within all_trees(t.leaf_count()), as a TreeIndex.
TreeIndex tree_index(const BinaryTree& t);

// Inverse of tree_index. Throws DomainError when the index is out of range.
BinaryTree index_to_tree(const TreeIndex& ti);
BinaryTree index_to_tree(int leaves, std::int64_t index);

// Bijection between binary trees with n leaves and general plane trees with
// n vertices: the right spine of each left subtree becomes a child list.
GeneralTree beta(const BinaryTree& t);
BinaryTree beta_inverse(const GeneralTree& g);

// Mirror image (recursively swaps children).
BinaryTree reflect(const BinaryTree& t);

// Dyck word of a general tree's edge set: depth-first walk emitting 0 for
// each edge descent and 1 for each ascent. The root contributes nothing, so
// a tree with n vertices yields a word of length 2(n-1).
std::string dyck_word(const GeneralTree& g);

}  // namespace treepat
