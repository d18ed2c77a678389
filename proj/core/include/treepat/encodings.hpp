#pragma once

#include <string>
#include <vector>

#include "treepat/tree.hpp"

namespace treepat {

// Letters in {-1, 0, 1}, every prefix sum nonnegative, total sum zero.
bool is_motzkin_word(const std::vector<int>& word);

// Bijection between n-leaf trees avoiding the four-leaf right comb
// (L(L(LL))) and Motzkin words of length n-1: the plane form of such a tree
// has at most two children per vertex, and the word lists children-1 along
// the depth-first traversal, dropping the final forced -1.
std::vector<int> motzkin_encode(const BinaryTree& t);
BinaryTree motzkin_decode(const std::vector<int>& word);

// Bijection between n-leaf trees avoiding (L((LL)L)) and binary words of
// length n-2 (n >= 2). A vertex contributes '1' for an internal right child
// followed by that child's word, then '0' for an internal left child
// followed by its word.
std::string omega_encode(const BinaryTree& t);
BinaryTree omega_decode(const std::string& word);

// Bijection between n-leaf trees avoiding ((LL)(LL)) and binary words of
// length n-2 (n >= 2): the internal vertices of such a tree form a single
// path from the root, and letter i records whether the path steps to the
// left (0) or right (1) child.
std::string spine_encode(const BinaryTree& t);
BinaryTree spine_decode(const std::string& word);

}  // namespace treepat
