#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "treepat/pattern.hpp"

namespace treepat {

struct DyckReport {
    std::string pattern_word;
    std::string word;
    int max_leaves = 0;
    bool pass = false;
    std::string failure;  // empty when pass
    std::optional<std::string> counterexample;  // offending tree
};

// Dyck words of the given semilength containing no contiguous occurrence of
// w, counted by exhaustive backtracking (semilength at most 12).
std::int64_t count_dyck_avoiders(const std::string& w, int semilength);

// Checks that for every tree with at most max_leaves leaves, the tree
// contains a copy of p exactly when the Dyck word of its plane form contains
// w as a contiguous subword, and that the avoider counts at each size agree
// with count_dyck_avoiders.
DyckReport check_dyck_characterization(const TreePattern& p,
                                       const std::string& w,
                                       int max_leaves = 11);

}  // namespace treepat
