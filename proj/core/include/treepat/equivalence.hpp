#pragma once

#include <string>
#include <vector>

#include "treepat/numbers.hpp"
#include "treepat/tree.hpp"

namespace treepat {

struct EquivalenceClass {
    int leaves = 0;
    int id = 0;                    // 1-based position in smallest-member order
    std::vector<int> members;      // ascending 1-based indices into all_trees(leaves)
    std::vector<BigInt> counts;    // shared avoider counts, n = 1..(order+1)/2

    int representative() const { return members.front(); }
    std::string label() const;     // e.g. "5.2"
};

struct Classification {
    int leaves = 0;
    int order = 0;                 // x-order the partition was computed at
    bool stable = false;           // partition unchanged when recomputed at order+8
    std::vector<EquivalenceClass> classes;

    int class_of(int index) const;  // 1-based tree index -> class id
};

// Partitions the m-leaf patterns by their avoider-count sequences through
// x-order `order` (default 2(m+10)-1). The counts are computed once at
// order+8, giving both the partition and its stability recheck.
Classification classify(int m, int order = 0);

// True when s and t have equal avoider counts through x-order `order`
// (default: the classify default for the larger pattern).
bool are_equivalent(const BinaryTree& s, const BinaryTree& t, int order = 0);

struct ConjecturePair {
    int s = 0, t = 0;  // tree indices whose bivariate series differ
};

struct ConjectureReport {
    int leaves = 0;
    int order = 0;
    int classes_checked = 0;
    int pairs_checked = 0;
    std::vector<ConjecturePair> violations;

    bool pass() const { return violations.empty(); }
};

// Checks that trees with equal avoider counts also share the bivariate
// copy-counting series through x-order `order`.
ConjectureReport check_enumerating_conjecture(int m, int order = 25);

}  // namespace treepat
