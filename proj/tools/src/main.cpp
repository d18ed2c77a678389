#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treepat/dyck.hpp"
#include "treepat/equivalence.hpp"
#include "treepat/errors.hpp"
#include "treepat/genfun.hpp"
#include "treepat/golden.hpp"
#include "treepat/pattern.hpp"
#include "treepat/polynomial.hpp"
#include "treepat/rewrite.hpp"
#include "treepat/series.hpp"
#include "treepat/tree.hpp"

using json = nlohmann::json;
using namespace treepat;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    int order = 31;
    long budget_ms = 60000;
    int workers = 1;  // reserved; every run uses one worker
    std::string format = "text";

    bool json_out() const { return format == "json"; }
    GenfunOptions genfun() const {
        return {order, std::chrono::milliseconds(budget_ms)};
    }
};

bool looks_like_index(const std::string& text) {
    return text.find(':') != std::string::npos &&
           text.find('(') == std::string::npos;
}

// Tree argument: a parenthesis word or an index form "leaves:index".
BinaryTree tree_arg(const std::string& text) {
    if (looks_like_index(text)) {
        const auto colon = text.find(':');
        return index_to_tree(std::stoi(text.substr(0, colon)),
                             std::stoll(text.substr(colon + 1)));
    }
    return parse_tree(text);
}

// Whole-tree pattern argument: accepts a pattern word (with L leaves), a
// plain tree word, or "leaves:index"; yields the underlying tree shape.
BinaryTree shape_arg(const std::string& text) {
    if (looks_like_index(text)) return tree_arg(text);
    return pattern_shape(parse_pattern(text));
}

std::string monomial_text(int xe, int ye) {
    if (xe == 0 && ye == 0) return "1";
    std::string s;
    if (xe > 0) s = "x^" + std::to_string(xe);
    if (ye > 0) {
        if (!s.empty()) s += "*";
        s += "y^" + std::to_string(ye);
    }
    return s;
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
    if (cfg.json_out())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_trees(const RunConfig& cfg, int leaves) {
    if (leaves > 14)
        throw ResourceError("tree listings support at most 14 leaves");
    const auto& ts = all_trees(leaves);
    json j{{"leaves", leaves}, {"count", std::to_string(ts.size())}};
    std::string text;
    auto& arr = j["trees"] = json::array();
    for (const auto& t : ts) {
        arr.push_back(t.word());
        text += t.word() + "\n";
    }
    emit(cfg, j, text);
    return 0;
}

int run_count(const RunConfig& cfg, const std::string& tree_text,
              const std::string& pattern_text) {
    BinaryTree T = tree_arg(tree_text);
    TreePattern p = parse_pattern(pattern_text);
    const std::int64_t k = count_copies(T, p);
    emit(cfg,
         json{{"tree", T.word()},
              {"pattern", p.word()},
              {"count", std::to_string(k)}},
         std::to_string(k) + "\n");
    return 0;
}

int run_series(const RunConfig& cfg, const std::string& pattern_text,
               bool enumerating, int order) {
    BinaryTree t = shape_arg(pattern_text);
    TruncatedSeries s =
        enumerating ? enumerate_series(t, order) : avoid_series(t, order);
    json j{{"pattern", pattern_of(t).word()},
           {"kind", enumerating ? "enumerating" : "avoiding"},
           {"order", order}};
    std::string text;
    auto& terms = j["terms"] = json::array();
    for (const auto& [key, c] : s.terms()) {
        terms.push_back(json{{"x", key.first},
                             {"y", key.second},
                             {"coefficient", to_string(c)}});
        text += monomial_text(key.first, key.second) + ": " + to_string(c) + "\n";
    }
    if (!enumerating) {
        auto& counts = j["leaf_counts"] = json::array();
        text += "avoiders by leaves:";
        for (int n = 1; 2 * n - 1 <= order; ++n) {
            const Rational c = s.coefficient(2 * n - 1, 0);
            counts.push_back(to_string(c));
            text += " " + to_string(c);
        }
        text += "\n";
    }
    emit(cfg, j, text);
    return 0;
}

int run_equation(const RunConfig& cfg, const std::string& pattern_text,
                 bool enumerating) {
    BinaryTree t = shape_arg(pattern_text);
    Poly eq = enumerating ? enumerate_equation(t, cfg.genfun())
                          : avoid_equation(t, cfg.genfun());
    TruncatedSeries s = enumerating ? enumerate_series(t, cfg.order)
                                    : avoid_series(t, cfg.order);
    const bool ok = verify_annihilates(
        eq,
        {{"x", TruncatedSeries::x(cfg.order)},
         {"y", TruncatedSeries::y(cfg.order)},
         {"f", s}},
        cfg.order);
    emit(cfg,
         json{{"pattern", pattern_of(t).word()},
              {"kind", enumerating ? "enumerating" : "avoiding"},
              {"equation", eq.text()},
              {"verified", ok},
              {"order", cfg.order}},
         eq.text() + "\nverified: " + (ok ? "true" : "false") + "\n");
    return ok ? 0 : kExitVerification;
}

int run_multi_equation(const RunConfig& cfg,
                       const std::vector<std::string>& pattern_texts) {
    std::vector<BinaryTree> patterns;
    for (const auto& s : pattern_texts) patterns.push_back(shape_arg(s));
    Poly eq = multi_equation(patterns, cfg.genfun());
    json jp = json::array();
    for (const auto& t : patterns) jp.push_back(pattern_of(t).word());
    emit(cfg, json{{"patterns", jp}, {"equation", eq.text()}},
         eq.text() + "\n");
    return 0;
}

int run_classify(const RunConfig& cfg, int leaves, int order, bool equations) {
    Classification c = classify(leaves, order);
    json j{{"leaves", c.leaves},
           {"order", c.order},
           {"stable", c.stable},
           {"classes", json::array()}};
    std::string text = "classes: " + std::to_string(c.classes.size()) +
                       (c.stable ? " (stable)" : " (NOT stable; raise --order)") +
                       "\n";
    for (const auto& cls : c.classes) {
        json jc{{"label", cls.label()},
                {"size", cls.members.size()},
                {"members", cls.members},
                {"counts", json::array()}};
        text += "class " + cls.label() + ": size " +
                std::to_string(cls.members.size()) + ", members";
        for (int m : cls.members) text += " " + std::to_string(m);
        text += "\n  counts:";
        for (const auto& v : cls.counts) {
            jc["counts"].push_back(to_string(v));
            text += " " + to_string(v);
        }
        text += "\n";
        if (equations) {
            Poly eq = enumerate_equation(index_to_tree(leaves, cls.representative()),
                                         cfg.genfun());
            jc["equation"] = eq.text();
            text += "  equation: " + eq.text() + "\n";
        }
        j["classes"].push_back(jc);
    }
    emit(cfg, j, text);
    return 0;
}

int run_verify_bijection(const RunConfig& cfg, const std::string& s_text,
                         const std::string& t_text,
                         const std::string& perm_text, const std::string& mode,
                         int max_leaves) {
    BinaryTree s = shape_arg(s_text), t = shape_arg(t_text);
    auto perm = parse_perm(perm_text);
    BijectionReport r = mode == "one-rule"
                            ? verify_one_rule(s, t, perm, max_leaves)
                            : verify_two_rule(s, t, perm, max_leaves);
    json j{{"mode", mode},
           {"s", r.s_word},
           {"t", r.t_word},
           {"perm", format_perm(r.perm)},
           {"max_leaves", r.max_leaves},
           {"pass", r.pass}};
    std::string text = mode + " (" + r.s_word + ", " + r.t_word + ", " +
                       format_perm(r.perm) + ") up to " +
                       std::to_string(r.max_leaves) + " leaves: ";
    if (r.pass) {
        text += "pass\n";
    } else {
        j["failure"] = r.failure;
        text += "fail\n  " + r.failure + "\n";
        if (r.counterexample) {
            j["counterexample"] = *r.counterexample;
            text += "  counterexample: " + *r.counterexample + "\n";
        }
    }
    emit(cfg, j, text);
    return r.pass ? 0 : kExitVerification;
}

int run_search_perms(const RunConfig& cfg, const std::string& s_text,
                     const std::string& t_text, const std::string& mode,
                     int max_leaves) {
    BinaryTree s = shape_arg(s_text), t = shape_arg(t_text);
    auto found = search_permutations(
        s, t, max_leaves,
        mode == "one-rule" ? SearchMode::OneRule : SearchMode::TwoRule);
    json j{{"mode", mode},
           {"s", pattern_of(s).word()},
           {"t", pattern_of(t).word()},
           {"max_leaves", max_leaves},
           {"perms", json::array()}};
    std::string text;
    for (const auto& p : found) {
        j["perms"].push_back(format_perm(p));
        text += format_perm(p) + "\n";
    }
    emit(cfg, j, text);
    return 0;
}

int run_dyck_check(const RunConfig& cfg, const std::string& pattern_text,
                   const std::string& word, int max_leaves) {
    BinaryTree t = shape_arg(pattern_text);
    DyckReport r = check_dyck_characterization(pattern_of(t), word, max_leaves);
    json j{{"pattern", r.pattern_word},
           {"word", r.word},
           {"max_leaves", r.max_leaves},
           {"pass", r.pass}};
    std::string text = "dyck (" + r.pattern_word + ", " + r.word + ") up to " +
                       std::to_string(r.max_leaves) + " leaves: ";
    if (r.pass) {
        text += "pass\n";
    } else {
        j["failure"] = r.failure;
        text += "fail\n  " + r.failure + "\n";
        if (r.counterexample) {
            j["counterexample"] = *r.counterexample;
            text += "  counterexample: " + *r.counterexample + "\n";
        }
    }
    emit(cfg, j, text);
    return r.pass ? 0 : kExitVerification;
}

// One named check inside `reproduce`.
struct CheckLog {
    json checks = json::array();
    std::string text;
    int failures = 0;

    void record(const std::string& name, bool pass, const std::string& detail) {
        checks.push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
        text += (pass ? "ok   " : "FAIL ") + name +
                (detail.empty() ? "" : ": " + detail) + "\n";
        if (!pass) ++failures;
    }
};

bool equation_matches(const Poly& derived, const std::string& expected,
                      const RingPtr& ring) {
    Poly got = derived.mapped_to(ring).normalized();
    Poly want = parse_poly(ring, expected).normalized();
    return got == want || got == (-want).normalized();
}

int run_reproduce(const RunConfig& cfg, bool extended) {
    CheckLog log;
    auto ring = make_ring({"x", "y", "f"});
    std::map<int, Classification> census;
    for (int m = 1; m <= 7; ++m) census.emplace(m, classify(m));

    {
        bool ok = true;
        const auto& cat = golden::catalan_prefix();
        for (int n = 1; n <= 9; ++n)
            ok = ok && std::int64_t(all_trees(n).size()) == cat[n - 1];
        log.record("tree-counts", ok, "");
    }

    for (int m = 1; m <= 7; ++m) {
        const Classification& c = census.at(m);
        bool ok = c.stable &&
                  int(c.classes.size()) == golden::class_counts()[m - 1];
        std::string detail = std::to_string(c.classes.size()) + " classes";
        for (const auto& ce : golden::class_equations())
            if (ce.leaves == m)
                ok = ok && int(c.classes[ce.id - 1].members.size()) == ce.size;
        log.record("census-" + std::to_string(m), ok, detail);
    }

    for (const auto& ce : golden::class_equations()) {
        const Classification& c = census.at(ce.leaves);
        BinaryTree rep =
            index_to_tree(ce.leaves, c.classes[ce.id - 1].representative());
        std::string name = "equation-" + std::to_string(ce.leaves) + "." +
                           std::to_string(ce.id);
        try {
            Poly eq = enumerate_equation(rep, cfg.genfun());
            bool ok = equation_matches(eq, ce.equation, ring);
            ok = ok && verify_annihilates(parse_poly(ring, ce.equation),
                                          {{"x", TruncatedSeries::x(25)},
                                           {"y", TruncatedSeries::y(25)},
                                           {"f", enumerate_series(rep, 25)}},
                                          25);
            log.record(name, ok, "");
        } catch (const ResourceError& e) {
            log.record(name, false, e.what());
        }
    }

    {
        BinaryTree t = pattern_shape(parse_pattern(golden::sample_pattern()));
        Poly eq = avoid_equation(t, cfg.genfun());
        log.record("sample-avoid-equation",
                   equation_matches(eq, golden::sample_avoid_equation(),
                                    make_ring({"x", "f"})),
                   "");
    }

    {
        const auto& rc = golden::sample_replacement_chain();
        BinaryTree s = index_to_tree(rc.rule.leaves, rc.rule.source);
        BinaryTree t = index_to_tree(rc.rule.leaves, rc.rule.target);
        ReplacementRule fwd =
            make_rule(pattern_of(t), pattern_of(s), parse_perm(rc.rule.perm));
        auto snaps =
            top_down_trace(index_to_tree(rc.leaves, rc.chain.front()), {fwd});
        bool ok = snaps.size() + 1 == rc.chain.size();
        for (std::size_t i = 0; ok && i < snaps.size(); ++i)
            ok = tree_index(snaps[i]).index == rc.chain[i + 1];
        log.record("replacement-chain", ok, "");
        log.record("replacement-one-rule",
                   verify_one_rule(s, t, parse_perm(rc.rule.perm), 10).pass, "");
        log.record("replacement-two-rule",
                   verify_two_rule(s, t, parse_perm(rc.rule.perm), 10).pass, "");
    }

    {
        bool ok = true;
        for (const auto& e : golden::five_leaf_two_rules())
            ok = ok && verify_two_rule(index_to_tree(e.leaves, e.source),
                                       index_to_tree(e.leaves, e.target),
                                       parse_perm(e.perm), 10)
                           .pass;
        log.record("five-leaf-two-rule-table", ok, "22 entries");
    }

    {
        bool ok = true;
        for (const auto& e : golden::dyck_entries()) {
            DyckReport r = check_dyck_characterization(
                pattern_of(index_to_tree(e.leaves, e.index)), e.word, 11);
            ok = ok && r.pass == e.holds;
        }
        log.record("dyck-table", ok, "");
    }

    if (extended) {
        {
            Classification c = classify(8, 99);
            log.record("census-8",
                       int(c.classes.size()) == golden::class_counts()[7],
                       std::to_string(c.classes.size()) + " classes");
        }
        {
            const auto& tr = golden::seven_leaf_two_rule();
            bool ok = verify_two_rule(index_to_tree(tr.leaves, tr.source),
                                      index_to_tree(tr.leaves, tr.target),
                                      parse_perm(tr.perm), 10)
                          .pass;
            for (const auto& e : golden::seven_leaf_one_rules()) {
                const BinaryTree s = index_to_tree(e.leaves, e.source);
                const BinaryTree t = index_to_tree(e.leaves, e.target);
                ok = ok && verify_one_rule(s, t, parse_perm(e.perm), 9).pass &&
                     !verify_one_rule(s, t, parse_perm(e.perm), 10).pass;
            }
            log.record("seven-leaf-trio", ok,
                       "one-rule candidates bijective for n <= 9 only");
        }
        {
            const auto& ib = golden::six_leaf_induced_bijection();
            auto rules = two_rule_set(
                index_to_tree(ib.rule.leaves, ib.rule.source),
                index_to_tree(ib.rule.leaves, ib.rule.target),
                parse_perm(ib.rule.perm));
            bool ok = verify_rule_set(rules, index_to_tree(ib.leaves, ib.source),
                                      index_to_tree(ib.leaves, ib.target), 12)
                          .pass;
            const auto& tw = golden::six_leaf_two_rule();
            ok = ok && verify_two_rule(index_to_tree(tw.leaves, tw.source),
                                       index_to_tree(tw.leaves, tw.target),
                                       parse_perm(tw.perm), 12)
                           .pass;
            log.record("six-leaf-bijections", ok, "");
        }
    }

    log.text += std::to_string(log.checks.size()) + " checks, " +
                std::to_string(log.failures) + " failures\n";
    emit(cfg,
         json{{"checks", log.checks}, {"failures", log.failures}},
         log.text);
    return log.failures == 0 ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"binary tree pattern avoidance toolkit"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--order", cfg.order, "Series truncation x-order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--budget-ms", cfg.budget_ms,
                   "Elimination time budget in milliseconds")
        ->envname("TREEPAT_CAS_BUDGET_MS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--workers", cfg.workers,
                   "Reserved; computations run on one worker")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int result = 0;

    {
        auto* c = app.add_subcommand("trees", "List all trees with n leaves");
        auto leaves = std::make_shared<int>(4);
        c->add_option("--leaves", *leaves, "Leaf count")
            ->required()
            ->check(CLI::PositiveNumber);
        c->callback([&, leaves] { result = run_trees(cfg, *leaves); });
    }
    {
        auto* c = app.add_subcommand("count", "Copies of a pattern in a tree");
        auto tree = std::make_shared<std::string>();
        auto pattern = std::make_shared<std::string>();
        c->add_option("--tree", *tree, "Tree word or leaves:index")->required();
        c->add_option("--pattern", *pattern, "Pattern word")->required();
        c->callback([&, tree, pattern] { result = run_count(cfg, *tree, *pattern); });
    }
    {
        auto* c = app.add_subcommand("series",
                                     "Avoiding or enumerating series of a pattern");
        auto pattern = std::make_shared<std::string>();
        auto enumerating = std::make_shared<bool>(false);
        auto order = std::make_shared<int>(0);
        c->add_option("--pattern", *pattern, "Pattern word or leaves:index")
            ->required();
        c->add_flag("--enumerating", *enumerating,
                    "Bivariate series with y marking copies");
        c->add_option("--order", *order, "Override the global x-order");
        c->callback([&, pattern, enumerating, order] {
            result = run_series(cfg, *pattern, *enumerating,
                                *order > 0 ? *order : cfg.order);
        });
    }
    {
        auto* c = app.add_subcommand("equation",
                                     "Algebraic equation satisfied by the series");
        auto pattern = std::make_shared<std::string>();
        auto enumerating = std::make_shared<bool>(false);
        c->add_option("--pattern", *pattern, "Pattern word or leaves:index")
            ->required();
        c->add_flag("--enumerating", *enumerating,
                    "Equation for the bivariate series");
        c->callback([&, pattern, enumerating] {
            result = run_equation(cfg, *pattern, *enumerating);
        });
    }
    {
        auto* c = app.add_subcommand(
            "multi-equation", "Joint equation for several patterns at once");
        auto patterns = std::make_shared<std::vector<std::string>>();
        c->add_option("--patterns", *patterns, "Comma-separated pattern words")
            ->required()
            ->delimiter(',');
        c->callback([&, patterns] { result = run_multi_equation(cfg, *patterns); });
    }
    {
        auto* c = app.add_subcommand("classify",
                                     "Partition m-leaf patterns by avoider counts");
        auto leaves = std::make_shared<int>(4);
        auto order = std::make_shared<int>(0);
        auto equations = std::make_shared<bool>(false);
        c->add_option("--leaves", *leaves, "Pattern leaf count")
            ->required()
            ->check(CLI::PositiveNumber);
        c->add_option("--order", *order,
                      "Partition x-order (0 picks a default by leaf count)");
        c->add_flag("--equations", *equations,
                    "Derive the equation of each class representative");
        c->callback([&, leaves, order, equations] {
            result = run_classify(cfg, *leaves, *order, *equations);
        });
    }
    {
        auto* c = app.add_subcommand("verify-bijection",
                                     "Check a replacement-rule bijection");
        auto s = std::make_shared<std::string>();
        auto t = std::make_shared<std::string>();
        auto perm = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("two-rule");
        auto max_leaves = std::make_shared<int>(12);
        c->add_option("--s", *s, "Source pattern")->required();
        c->add_option("--t", *t, "Target pattern")->required();
        c->add_option("--perm", *perm, "Blank permutation, e.g. 3124")->required();
        c->add_option("--mode", *mode, "Verification mode")
            ->check(CLI::IsMember({"one-rule", "two-rule"}))
            ->capture_default_str();
        c->add_option("--max-leaves", *max_leaves, "Largest size checked")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        c->callback([&, s, t, perm, mode, max_leaves] {
            result = run_verify_bijection(cfg, *s, *t, *perm, *mode, *max_leaves);
        });
    }
    {
        auto* c = app.add_subcommand("search-perms",
                                     "Find all verifying blank permutations");
        auto s = std::make_shared<std::string>();
        auto t = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("two-rule");
        auto max_leaves = std::make_shared<int>(10);
        c->add_option("--s", *s, "Source pattern")->required();
        c->add_option("--t", *t, "Target pattern")->required();
        c->add_option("--mode", *mode, "Search mode")
            ->check(CLI::IsMember({"one-rule", "two-rule"}))
            ->capture_default_str();
        c->add_option("--max-leaves", *max_leaves, "Largest size checked")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        c->callback([&, s, t, mode, max_leaves] {
            result = run_search_perms(cfg, *s, *t, *mode, *max_leaves);
        });
    }
    {
        auto* c = app.add_subcommand(
            "dyck-check", "Pattern containment as a Dyck-word factor");
        auto pattern = std::make_shared<std::string>();
        auto word = std::make_shared<std::string>();
        auto max_leaves = std::make_shared<int>(11);
        c->add_option("--pattern", *pattern, "Pattern word or leaves:index")
            ->required();
        c->add_option("--word", *word, "Dyck subword over {0,1}")->required();
        c->add_option("--max-leaves", *max_leaves, "Largest size checked")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        c->callback([&, pattern, word, max_leaves] {
            result = run_dyck_check(cfg, *pattern, *word, *max_leaves);
        });
    }
    {
        auto* c = app.add_subcommand(
            "reproduce", "Re-derive the known-good tables and compare");
        auto extended = std::make_shared<bool>(false);
        c->add_flag("--extended", *extended,
                    "Include the multi-minute eight-leaf and seven-leaf runs");
        c->callback([&, extended] { result = run_reproduce(cfg, *extended); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return result;
}
