#include "treepat/equivalence.hpp"

#include <algorithm>
#include <map>

#include "treepat/errors.hpp"
#include "treepat/genfun.hpp"

namespace treepat {

namespace {

int default_order(int m) { return 2 * (m + 10) - 1; }

// Buckets indices (1-based) by count vector; classes ordered by smallest member.
std::vector<std::vector<int>> partition_by(
    const std::vector<std::vector<BigInt>>& counts) {
    std::map<std::vector<BigInt>, std::vector<int>> buckets;
    for (size_t i = 0; i < counts.size(); ++i)
        buckets[counts[i]].push_back(static_cast<int>(i) + 1);
    std::vector<std::vector<int>> classes;
    classes.reserve(buckets.size());
    for (auto& [key, members] : buckets) classes.push_back(members);
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return classes;
}

}  // namespace

std::string EquivalenceClass::label() const {
    return std::to_string(leaves) + "." + std::to_string(id);
}

int Classification::class_of(int index) const {
    for (const auto& c : classes)
        if (std::binary_search(c.members.begin(), c.members.end(), index))
            return c.id;
    throw DomainError("tree index out of range for this classification");
}

Classification classify(int m, int order) {
    if (m < 1) throw DomainError("patterns need at least one leaf");
    if (order <= 0) order = default_order(m);

    const int n_max = (order + 1) / 2;
    const int n_ext = n_max + 4;  // recheck window: order + 8

    const auto& trees = all_trees(m);
    std::vector<std::vector<BigInt>> full(trees.size());
    for (size_t i = 0; i < trees.size(); ++i)
        full[i] = leaf_counts(trees[i], n_ext);

    std::vector<std::vector<BigInt>> prefix(trees.size());
    for (size_t i = 0; i < trees.size(); ++i)
        prefix[i].assign(full[i].begin(), full[i].begin() + n_max);

    auto classes_now = partition_by(prefix);
    auto classes_ext = partition_by(full);

    Classification result;
    result.leaves = m;
    result.order = order;
    result.stable = classes_now == classes_ext;
    for (size_t i = 0; i < classes_now.size(); ++i) {
        EquivalenceClass c;
        c.leaves = m;
        c.id = static_cast<int>(i) + 1;
        c.members = classes_now[i];
        c.counts = prefix[c.members.front() - 1];
        result.classes.push_back(std::move(c));
    }
    return result;
}

bool are_equivalent(const BinaryTree& s, const BinaryTree& t, int order) {
    if (order <= 0)
        order = default_order(std::max(s.leaf_count(), t.leaf_count()));
    const int n_max = (order + 1) / 2;
    return leaf_counts(s, n_max) == leaf_counts(t, n_max);
}

ConjectureReport check_enumerating_conjecture(int m, int order) {
    ConjectureReport report;
    report.leaves = m;
    report.order = order;

    auto classification = classify(m);
    const auto& trees = all_trees(m);
    for (const auto& cls : classification.classes) {
        if (cls.members.size() < 2) continue;
        ++report.classes_checked;
        auto reference =
            enumerate_series(trees[cls.representative() - 1], order);
        for (size_t i = 1; i < cls.members.size(); ++i) {
            ++report.pairs_checked;
            auto other = enumerate_series(trees[cls.members[i] - 1], order);
            if (!(reference - other).is_zero())
                report.violations.push_back(
                    {cls.representative(), cls.members[i]});
        }
    }
    return report;
}

}  // namespace treepat
