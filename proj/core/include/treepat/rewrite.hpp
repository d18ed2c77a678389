#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treepat/pattern.hpp"
#include "treepat/tree.hpp"

namespace treepat {

// Rewrites a subtree matching lhs into the shape of rhs: the subtree captured
// at blank perm[i-1] of lhs (blanks numbered 1.. left to right) is reattached
// at blank i of rhs.
struct ReplacementRule {
    TreePattern lhs;
    TreePattern rhs;
    std::vector<int> perm;
};

// Validates blank counts and that perm is a permutation of 1..m.
ReplacementRule make_rule(const TreePattern& lhs, const TreePattern& rhs,
                          const std::vector<int>& perm);

// Digit string such as "3124", or comma-separated entries once any exceed 9.
std::vector<int> parse_perm(const std::string& text);
std::string format_perm(const std::vector<int>& perm);

// Text form "lhs => rhs : perm".
ReplacementRule parse_rule(const std::string& text);
std::string format_rule(const ReplacementRule& rule);

std::vector<int> inverse_perm(const std::vector<int>& perm);
ReplacementRule inverse_rule(const ReplacementRule& rule);

// Applies the rule at the root vertex only; nullopt when lhs does not match.
std::optional<BinaryTree> apply_at(const ReplacementRule& rule,
                                   const BinaryTree& t);

// Root-first pass: at each vertex apply the first matching rule once, then
// descend into the possibly new children; the rewritten vertex itself is not
// re-examined. With more than one rule the set must agree on overlapping
// matches (DomainError otherwise).
BinaryTree top_down_replace(const BinaryTree& t,
                            const std::vector<ReplacementRule>& rules);

// Leaves-first pass: children are rewritten before their parent, then one
// application at the parent; the result is not re-examined.
BinaryTree bottom_up_replace(const BinaryTree& t,
                             const std::vector<ReplacementRule>& rules);

// Whole-tree snapshots taken after each single application during the same
// root-first pass; empty when nothing matches, otherwise the last snapshot
// equals top_down_replace(t, rules).
std::vector<BinaryTree> top_down_trace(
    const BinaryTree& t, const std::vector<ReplacementRule>& rules);

// True when both rules rewrite any common match identically: labels the
// blanks of lhs(a) ∩ lhs(b) distinctly, applies each rule, and compares the
// labeled images. Vacuously true when the two lhs cannot match at the same
// vertex.
bool rules_agree_on_intersection(const ReplacementRule& a,
                                 const ReplacementRule& b);

// The self-inverse pair {(t -> s, perm), (s -> t, perm^-1)} acting on whole
// trees; top_down_replace with it is its own bottom-up inverse.
std::vector<ReplacementRule> two_rule_set(const BinaryTree& s,
                                          const BinaryTree& t,
                                          const std::vector<int>& perm);

enum class BijectionMode { OneRule, TwoRule, RuleSet };

struct BijectionReport {
    BijectionMode mode = BijectionMode::OneRule;
    std::string s_word;
    std::string t_word;
    std::vector<int> perm;  // empty for RuleSet
    int max_leaves = 0;
    bool pass = false;
    std::string failure;  // empty when pass
    std::optional<std::string> counterexample;  // offending input tree
};

// Checks that top_down_replace with the single rule (t -> s, perm) maps each
// n-leaf avoider of s (n <= max_leaves) to an avoider of t, that bottom-up
// with (s -> t, perm^-1) recovers the input, and that the images exhaust the
// avoiders of t.
BijectionReport verify_one_rule(const BinaryTree& s, const BinaryTree& t,
                                const std::vector<int>& perm,
                                int max_leaves = 12);

// Checks that top_down_replace with two_rule_set(s, t, perm) permutes all
// n-leaf trees (bottom-up round trip) and restricts to a bijection from
// avoiders of s onto avoiders of t.
BijectionReport verify_two_rule(const BinaryTree& s, const BinaryTree& t,
                                const std::vector<int>& perm,
                                int max_leaves = 12);

// The same checks for an arbitrary rule set: round trip against the inverse
// rules on all trees, and the restriction maps avoiders of s onto avoiders
// of t.
BijectionReport verify_rule_set(const std::vector<ReplacementRule>& rules,
                                const BinaryTree& s, const BinaryTree& t,
                                int max_leaves = 12);

enum class SearchMode { OneRule, TwoRule };

// All leaf permutations (lexicographic order) whose bijection check passes
// up to max_leaves. Staged filtering: overlap agreement first in two-rule
// mode, then verification at small sizes, then the full range.
std::vector<std::vector<int>> search_permutations(
    const BinaryTree& s, const BinaryTree& t, int max_leaves = 10,
    SearchMode mode = SearchMode::TwoRule);

}  // namespace treepat
