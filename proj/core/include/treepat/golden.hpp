#pragma once

#include <cstdint>
#include <vector>

namespace treepat::golden {

// Known-good reference data shared by the test suite and the `reproduce`
// tool. Everything here has been cross-checked against independently
// computed values; tests treat these tables as the expected output.

// One equivalence class of patterns with `leaves` leaves. Classes of a
// given size are numbered by `id` in order of their smallest member
// index. `size` is the number of member trees and `equation` is a
// polynomial in x, y, f (parseable by parse_poly over a ring containing
// those variables) that annihilates the class's enumerating series f,
// where x marks vertices and y marks copies of the pattern.
struct ClassEquation {
    int leaves;
    int id;
    int size;
    const char* equation;
};

// Defining equations for every class with at most six leaves.
const std::vector<ClassEquation>& class_equations();

// class_counts()[m-1] = number of equivalence classes among patterns
// with m leaves, for m = 1..8.
const std::vector<int>& class_counts();

// A replacement-rule datum: source and target pattern indices into
// all_trees(leaves), plus the permutation of blank positions.
struct RuleEntry {
    int leaves;
    std::int64_t source;
    std::int64_t target;
    const char* perm;
};

// Every ordered pair of five-leaf patterns related by a verified
// two-rule replacement bijection, with its permutation.
const std::vector<RuleEntry>& five_leaf_two_rules();

// The three seven-leaf patterns whose equivalence is settled by
// replacement bijections rather than by equation.
const std::vector<std::int64_t>& seven_leaf_trio();

// The one two-rule bijection known within that trio.
const RuleEntry& seven_leaf_two_rule();

// Candidate one-rule bijections for the rest of the trio. Each candidate
// maps avoiders onto avoiders for every n <= 9 but fails at n = 10, so
// none of them settles the equivalence.
const std::vector<RuleEntry>& seven_leaf_one_rules();

// A two-rule bijection between six-leaf patterns.
const RuleEntry& six_leaf_two_rule();

// A four-leaf rule pair that, applied to six-leaf trees, restricts to a
// bijection from the avoiders of one six-leaf pattern onto another.
struct InducedBijection {
    RuleEntry rule;        // underlying rule pair (4 leaves)
    int leaves;            // leaf count at which the restriction is taken
    std::int64_t source;   // pattern whose avoiders form the domain
    std::int64_t target;   // pattern whose avoiders form the image
};
const InducedBijection& six_leaf_induced_bijection();

// Pattern / Dyck-subword correspondences: containment of the pattern in
// a tree is equivalent to containment of `word` as a factor of the
// tree's Dyck word. `holds` is false for the near-miss control entry.
struct DyckEntry {
    int leaves;
    std::int64_t index;
    const char* word;
    bool holds;
};
const std::vector<DyckEntry>& dyck_entries();

// Worked avoidance example: the pattern and a polynomial in x, f
// annihilating its avoiding series (x marks vertices).
const char* sample_pattern();
const char* sample_avoid_equation();

// Worked replacement example: applying the one-rule map for
// (source, target, perm) at four leaves to the first nine-leaf tree
// index rewrites it through each subsequent index in turn.
struct ReplacementChain {
    RuleEntry rule;
    int leaves;
    std::vector<std::int64_t> chain;
};
const ReplacementChain& sample_replacement_chain();

// Leaf-indexed prefixes: counts of n-leaf binary trees and of n-leaf
// avoiders of any one four-leaf comb, n = 1..
const std::vector<std::int64_t>& catalan_prefix();
const std::vector<std::int64_t>& motzkin_prefix();

}  // namespace treepat::golden
