#include "treepat/dyck.hpp"

#include "treepat/errors.hpp"
#include "treepat/tree.hpp"

namespace treepat {

namespace {

// Counts completions of the prefix held in buffer, pruning any branch that
// has just completed a copy of w.
void count_avoiders(std::string& buffer, int zeros_left, int ones_left,
                    const std::string& w, std::int64_t& count) {
    if (buffer.size() >= w.size() &&
        buffer.compare(buffer.size() - w.size(), w.size(), w) == 0)
        return;
    if (zeros_left == 0 && ones_left == 0) {
        ++count;
        return;
    }
    if (zeros_left > 0) {
        buffer += '0';
        count_avoiders(buffer, zeros_left - 1, ones_left, w, count);
        buffer.pop_back();
    }
    if (ones_left > zeros_left) {
        buffer += '1';
        count_avoiders(buffer, zeros_left, ones_left - 1, w, count);
        buffer.pop_back();
    }
}

}  // namespace

std::int64_t count_dyck_avoiders(const std::string& w, int semilength) {
    if (semilength < 0) throw DomainError("semilength must be nonnegative");
    if (semilength > 12)
        throw ResourceError(
            "exhaustive Dyck counting supports semilength at most 12");
    if (w.find_first_not_of("01") != std::string::npos)
        throw DomainError("word must be over {0,1}");
    if (w.empty()) return 0;
    std::string buffer;
    buffer.reserve(static_cast<std::size_t>(2 * semilength));
    std::int64_t count = 0;
    count_avoiders(buffer, semilength, semilength, w, count);
    return count;
}

DyckReport check_dyck_characterization(const TreePattern& p,
                                       const std::string& w,
                                       int max_leaves) {
    DyckReport report;
    report.pattern_word = p.word();
    report.word = w;
    report.max_leaves = max_leaves;
    for (int n = 1; n <= max_leaves; ++n) {
        std::int64_t tree_avoiders = 0;
        for (const BinaryTree& T : all_trees(n)) {
            const bool has_copy = !avoids(T, p);
            const bool has_word =
                dyck_word(beta(T)).find(w) != std::string::npos;
            if (has_copy != has_word) {
                report.failure = has_copy
                    ? "tree contains the pattern but its Dyck word lacks "
                      "the subword"
                    : "Dyck word contains the subword but the tree avoids "
                      "the pattern";
                report.counterexample = T.word();
                return report;
            }
            if (!has_copy) ++tree_avoiders;
        }
        if (tree_avoiders != count_dyck_avoiders(w, n - 1)) {
            report.failure =
                "avoider count differs from the subword-avoiding Dyck "
                "count at " + std::to_string(n) + " leaves";
            return report;
        }
    }
    report.pass = true;
    return report;
}

}  // namespace treepat
