#include "treepat/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "treepat/errors.hpp"

namespace treepat {

namespace {

std::string trimmed(const std::string& text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return text.substr(b, e - b);
}

}  // namespace

ReplacementRule make_rule(const TreePattern& lhs, const TreePattern& rhs,
                          const std::vector<int>& perm) {
    const int m = lhs.blank_count();
    if (rhs.blank_count() != m)
        throw DomainError("rule sides must have the same number of blanks");
    if (static_cast<int>(perm.size()) != m)
        throw DomainError("permutation length must match the blank count");
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v)])
            throw DomainError("not a permutation of the blank positions");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return {lhs, rhs, perm};
}

std::vector<int> parse_perm(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty permutation", 0);
    std::vector<int> perm;
    if (s.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string item = s.substr(pos, comma - pos);
            if (item.empty() ||
                item.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad permutation entry '" + item + "'", pos);
            perm.push_back(std::stoi(item));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < '1' || s[i] > '9')
                throw ParseError("permutation digits must be 1-9; "
                                 "use commas for larger entries",
                                 i);
            perm.push_back(s[i] - '0');
        }
    }
    return perm;
}

std::string format_perm(const std::vector<int>& perm) {
    const bool wide = perm.size() > 9;
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (wide && i) out += ',';
        out += std::to_string(perm[i]);
    }
    return out;
}

ReplacementRule parse_rule(const std::string& text) {
    const std::size_t arrow = text.find("=>");
    if (arrow == std::string::npos)
        throw ParseError("rule must have the form 'lhs => rhs : perm'", 0);
    const std::size_t colon = text.rfind(':');
    if (colon == std::string::npos || colon < arrow)
        throw ParseError("rule must end with ': perm'", text.size());
    TreePattern lhs = parse_pattern(trimmed(text.substr(0, arrow)));
    TreePattern rhs =
        parse_pattern(trimmed(text.substr(arrow + 2, colon - arrow - 2)));
    return make_rule(lhs, rhs, parse_perm(text.substr(colon + 1)));
}

std::string format_rule(const ReplacementRule& rule) {
    return rule.lhs.word() + " => " + rule.rhs.word() + " : " +
           format_perm(rule.perm);
}

std::vector<int> inverse_perm(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        inv[static_cast<std::size_t>(perm[i] - 1)] = static_cast<int>(i) + 1;
    return inv;
}

ReplacementRule inverse_rule(const ReplacementRule& rule) {
    return {rule.rhs, rule.lhs, inverse_perm(rule.perm)};
}

std::optional<BinaryTree> apply_at(const ReplacementRule& rule,
                                   const BinaryTree& t) {
    auto caught = match_capture(t, rule.lhs);
    if (!caught) return std::nullopt;
    std::vector<BinaryTree> fill(rule.perm.size());
    for (std::size_t i = 0; i < rule.perm.size(); ++i)
        fill[i] = (*caught)[static_cast<std::size_t>(rule.perm[i] - 1)];
    return substitute(rule.rhs, fill);
}

namespace {

void require_agreement(const std::vector<ReplacementRule>& rules) {
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = i + 1; j < rules.size(); ++j)
            if (!rules_agree_on_intersection(rules[i], rules[j]))
                throw DomainError(
                    "replacement rules disagree on overlapping matches");
}

BinaryTree top_down_impl(const BinaryTree& t,
                         const std::vector<ReplacementRule>& rules) {
    BinaryTree current = t;
    for (const auto& rule : rules)
        if (auto replaced = apply_at(rule, current)) {
            current = *replaced;
            break;
        }
    if (current.is_leaf()) return current;
    return BinaryTree(top_down_impl(current.left(), rules),
                      top_down_impl(current.right(), rules));
}

BinaryTree bottom_up_impl(const BinaryTree& t,
                          const std::vector<ReplacementRule>& rules) {
    BinaryTree current =
        t.is_leaf() ? t
                    : BinaryTree(bottom_up_impl(t.left(), rules),
                                 bottom_up_impl(t.right(), rules));
    for (const auto& rule : rules)
        if (auto replaced = apply_at(rule, current)) return *replaced;
    return current;
}

}  // namespace

BinaryTree top_down_replace(const BinaryTree& t,
                            const std::vector<ReplacementRule>& rules) {
    require_agreement(rules);
    return top_down_impl(t, rules);
}

BinaryTree bottom_up_replace(const BinaryTree& t,
                             const std::vector<ReplacementRule>& rules) {
    require_agreement(rules);
    return bottom_up_impl(t, rules);
}

namespace {

BinaryTree replace_at_path(const BinaryTree& root, const std::vector<int>& path,
                           std::size_t depth, const BinaryTree& sub) {
    if (depth == path.size()) return sub;
    if (path[depth] == 0)
        return BinaryTree(replace_at_path(root.left(), path, depth + 1, sub),
                          root.right());
    return BinaryTree(root.left(),
                      replace_at_path(root.right(), path, depth + 1, sub));
}

void trace_impl(BinaryTree& root, std::vector<int>& path,
                const BinaryTree& node,
                const std::vector<ReplacementRule>& rules,
                std::vector<BinaryTree>& out) {
    BinaryTree current = node;
    for (const auto& rule : rules)
        if (auto replaced = apply_at(rule, current)) {
            current = *replaced;
            root = replace_at_path(root, path, 0, current);
            out.push_back(root);
            break;
        }
    if (current.is_leaf()) return;
    path.push_back(0);
    trace_impl(root, path, current.left(), rules, out);
    path.back() = 1;
    trace_impl(root, path, current.right(), rules, out);
    path.pop_back();
}

}  // namespace

std::vector<BinaryTree> top_down_trace(
    const BinaryTree& t, const std::vector<ReplacementRule>& rules) {
    require_agreement(rules);
    BinaryTree root = t;
    std::vector<int> path;
    std::vector<BinaryTree> out;
    trace_impl(root, path, t, rules, out);
    return out;
}

namespace {

// A pattern with one integer label per blank, left to right.
struct LabeledPattern {
    TreePattern shape;
    std::vector<int> labels;

    bool operator==(const LabeledPattern& o) const {
        return labels == o.labels && shape == o.shape;
    }
};

// Matches pat against the labeled pattern (shape, labels), collecting the
// labeled subpattern under each blank of pat. pos tracks how many blanks of
// the full shape have been passed.
bool capture_labeled(const TreePattern& pat, const TreePattern& shape,
                     const std::vector<int>& labels, std::size_t& pos,
                     std::vector<LabeledPattern>& caught) {
    switch (pat.kind()) {
        case TreePattern::Kind::Blank: {
            const std::size_t b =
                static_cast<std::size_t>(shape.blank_count());
            caught.push_back(
                {shape, std::vector<int>(labels.begin() + pos,
                                         labels.begin() + pos + b)});
            pos += b;
            return true;
        }
        case TreePattern::Kind::TerminalLeaf:
            return shape.is_terminal_leaf();
        case TreePattern::Kind::Internal:
            if (!shape.is_internal()) return false;
            return capture_labeled(pat.left(), shape.left(), labels, pos,
                                   caught) &&
                   capture_labeled(pat.right(), shape.right(), labels, pos,
                                   caught);
    }
    return false;
}

LabeledPattern build_labeled(const TreePattern& rhs,
                             const std::vector<LabeledPattern>& fill,
                             std::size_t& next) {
    switch (rhs.kind()) {
        case TreePattern::Kind::Blank:
            return fill[next++];
        case TreePattern::Kind::TerminalLeaf:
            return {TreePattern::terminal_leaf(), {}};
        case TreePattern::Kind::Internal: {
            LabeledPattern l = build_labeled(rhs.left(), fill, next);
            LabeledPattern r = build_labeled(rhs.right(), fill, next);
            std::vector<int> labels = std::move(l.labels);
            labels.insert(labels.end(), r.labels.begin(), r.labels.end());
            return {TreePattern::internal(l.shape, r.shape),
                    std::move(labels)};
        }
    }
    throw DomainError("unreachable");
}

LabeledPattern apply_labeled(const ReplacementRule& rule,
                             const LabeledPattern& u) {
    std::vector<LabeledPattern> caught;
    std::size_t pos = 0;
    if (!capture_labeled(rule.lhs, u.shape, u.labels, pos, caught))
        throw DomainError("pattern does not match its own intersection");
    std::vector<LabeledPattern> fill(rule.perm.size());
    for (std::size_t i = 0; i < rule.perm.size(); ++i)
        fill[i] = caught[static_cast<std::size_t>(rule.perm[i] - 1)];
    std::size_t next = 0;
    return build_labeled(rule.rhs, fill, next);
}

}  // namespace

bool rules_agree_on_intersection(const ReplacementRule& a,
                                 const ReplacementRule& b) {
    auto u = intersect(a.lhs, b.lhs);
    if (!u) return true;
    std::vector<int> labels(static_cast<std::size_t>(u->blank_count()));
    std::iota(labels.begin(), labels.end(), 1);
    LabeledPattern lu{*u, std::move(labels)};
    return apply_labeled(a, lu) == apply_labeled(b, lu);
}

std::vector<ReplacementRule> two_rule_set(const BinaryTree& s,
                                          const BinaryTree& t,
                                          const std::vector<int>& perm) {
    const TreePattern ps = pattern_of(s), pt = pattern_of(t);
    return {make_rule(pt, ps, perm), make_rule(ps, pt, inverse_perm(perm))};
}

namespace {

BijectionReport failed(BijectionReport report, std::string why,
                       const BinaryTree* witness = nullptr) {
    report.pass = false;
    report.failure = std::move(why);
    if (witness) report.counterexample = witness->word();
    return report;
}

BijectionReport run_rule_set(BijectionReport report,
                             const std::vector<ReplacementRule>& rules,
                             const BinaryTree& s, const BinaryTree& t,
                             int max_leaves) {
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = i + 1; j < rules.size(); ++j)
            if (!rules_agree_on_intersection(rules[i], rules[j]))
                return failed(std::move(report),
                              "rules disagree on an overlapping match");
    std::vector<ReplacementRule> inverses;
    inverses.reserve(rules.size());
    for (const auto& rule : rules) inverses.push_back(inverse_rule(rule));
    for (std::size_t i = 0; i < inverses.size(); ++i)
        for (std::size_t j = i + 1; j < inverses.size(); ++j)
            if (!rules_agree_on_intersection(inverses[i], inverses[j]))
                return failed(std::move(report),
                              "inverse rules disagree on an overlapping match");

    const TreePattern ps = pattern_of(s), pt = pattern_of(t);
    for (int n = 1; n <= max_leaves; ++n) {
        std::unordered_set<std::string> images;
        std::int64_t t_avoiders = 0;
        for (const BinaryTree& T : all_trees(n)) {
            BinaryTree image = top_down_impl(T, rules);
            if (bottom_up_impl(image, inverses) != T)
                return failed(std::move(report),
                              "bottom-up inverse does not recover the input",
                              &T);
            if (avoids(T, pt)) ++t_avoiders;
            if (avoids(T, ps)) {
                if (!avoids(image, pt))
                    return failed(std::move(report),
                                  "image does not avoid the target pattern",
                                  &T);
                images.insert(image.word());
            }
        }
        if (static_cast<std::int64_t>(images.size()) != t_avoiders)
            return failed(std::move(report),
                          "images of the avoiders of the source pattern do "
                          "not exhaust the avoiders of the target pattern "
                          "at " + std::to_string(n) + " leaves");
    }
    report.pass = true;
    return report;
}

BijectionReport base_report(BijectionMode mode, const BinaryTree& s,
                            const BinaryTree& t, std::vector<int> perm,
                            int max_leaves) {
    BijectionReport report;
    report.mode = mode;
    report.s_word = s.word();
    report.t_word = t.word();
    report.perm = std::move(perm);
    report.max_leaves = max_leaves;
    return report;
}

}  // namespace

BijectionReport verify_one_rule(const BinaryTree& s, const BinaryTree& t,
                                const std::vector<int>& perm,
                                int max_leaves) {
    BijectionReport report =
        base_report(BijectionMode::OneRule, s, t, perm, max_leaves);
    const TreePattern ps = pattern_of(s), pt = pattern_of(t);
    const std::vector<ReplacementRule> forward = {make_rule(pt, ps, perm)};
    const std::vector<ReplacementRule> backward = {
        make_rule(ps, pt, inverse_perm(perm))};
    for (int n = 1; n <= max_leaves; ++n) {
        std::unordered_set<std::string> images;
        std::int64_t t_avoiders = 0;
        for (const BinaryTree& T : all_trees(n)) {
            if (avoids(T, pt)) ++t_avoiders;
            if (!avoids(T, ps)) continue;
            BinaryTree image = top_down_impl(T, forward);
            if (!avoids(image, pt))
                return failed(std::move(report),
                              "image does not avoid the target pattern", &T);
            if (bottom_up_impl(image, backward) != T)
                return failed(std::move(report),
                              "bottom-up inverse does not recover the input",
                              &T);
            images.insert(image.word());
        }
        if (static_cast<std::int64_t>(images.size()) != t_avoiders)
            return failed(std::move(report),
                          "images of the avoiders of the source pattern do "
                          "not exhaust the avoiders of the target pattern "
                          "at " + std::to_string(n) + " leaves");
    }
    report.pass = true;
    return report;
}

BijectionReport verify_two_rule(const BinaryTree& s, const BinaryTree& t,
                                const std::vector<int>& perm,
                                int max_leaves) {
    return run_rule_set(
        base_report(BijectionMode::TwoRule, s, t, perm, max_leaves),
        two_rule_set(s, t, perm), s, t, max_leaves);
}

BijectionReport verify_rule_set(const std::vector<ReplacementRule>& rules,
                                const BinaryTree& s, const BinaryTree& t,
                                int max_leaves) {
    return run_rule_set(
        base_report(BijectionMode::RuleSet, s, t, {}, max_leaves), rules, s,
        t, max_leaves);
}

std::vector<std::vector<int>> search_permutations(const BinaryTree& s,
                                                  const BinaryTree& t,
                                                  int max_leaves,
                                                  SearchMode mode) {
    const int m = s.leaf_count();
    if (t.leaf_count() != m)
        throw DomainError("patterns must have the same number of leaves");
    if (m > 7)
        throw DomainError(
            "permutation search supports patterns of at most seven leaves");

    const TreePattern ps = pattern_of(s), pt = pattern_of(t);
    auto verify = [&](const std::vector<int>& perm, int n_max) {
        return mode == SearchMode::OneRule
                   ? verify_one_rule(s, t, perm, n_max)
                   : verify_two_rule(s, t, perm, n_max);
    };

    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> found;
    do {
        if (mode == SearchMode::TwoRule &&
            !rules_agree_on_intersection(
                make_rule(pt, ps, perm),
                make_rule(ps, pt, inverse_perm(perm))))
            continue;
        bool alive = true;
        for (int stage : {m + 1, m + 3}) {
            if (stage >= max_leaves) break;
            if (!verify(perm, stage).pass) {
                alive = false;
                break;
            }
        }
        if (alive && verify(perm, max_leaves).pass) found.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

}  // namespace treepat
