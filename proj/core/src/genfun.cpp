#include "treepat/genfun.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "treepat/errors.hpp"
#include "treepat/groebner.hpp"
#include "treepat/pattern.hpp"
#include "treepat/weights.hpp"

namespace treepat {
namespace {

// Same shape as eliminate's output ring: vars in `keep` order, the last one
// most significant.
RingPtr equation_ring(const std::vector<std::string>& keep) {
    MonomialOrder order;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        MonomialOrder::Block blk;
        blk.kind = MonomialOrder::Kind::Lex;
        blk.vars.push_back(static_cast<int>(keep.size() - 1 - i));
        order.blocks.push_back(std::move(blk));
    }
    return make_ring(keep, std::move(order));
}

std::vector<Poly> system_equations(const WeightSystem& sys) {
    std::vector<Poly> eqs;
    for (std::size_t i = 0; i < sys.unknown_vars.size(); ++i)
        eqs.push_back(Poly::variable(sys.ring, sys.unknown_vars[i]) - sys.rhs[i]);
    return eqs;
}

// Solves a system whose parameters are (x) or (x, y) series.
std::vector<TruncatedSeries> solve_bivariate(const WeightSystem& sys, int order) {
    std::map<int, TruncatedSeries> params;
    params.emplace(sys.param_vars[0], TruncatedSeries::x(order));
    if (sys.param_vars.size() == 2)
        params.emplace(sys.param_vars[1], TruncatedSeries::y(order));
    else if (sys.param_vars.size() != 1)
        throw DomainError("system has more than two parameters");
    return series_solve(sys.series_system(), params, order);
}

Poly renamed(const Poly& p, const std::map<std::string, std::string>& names,
             RingPtr dst) {
    const RingPtr& src = p.ring();
    std::vector<int> where(src->vars.size(), -1);
    for (std::size_t v = 0; v < src->vars.size(); ++v) {
        auto it = names.find(src->vars[v]);
        const std::string& name = it == names.end() ? src->vars[v] : it->second;
        if (p.uses_var(static_cast<int>(v)))
            where[v] = dst->index_of(name);
    }
    std::vector<Poly::Term> terms;
    for (const auto& t : p.terms()) {
        Exponents e(dst->vars.size(), 0);
        for (std::size_t v = 0; v < t.exp.size(); ++v)
            if (t.exp[v] != 0) e[static_cast<std::size_t>(where[v])] += t.exp[v];
        terms.push_back({std::move(e), t.coef});
    }
    return Poly::from_terms(dst, std::move(terms));
}

// Elimination callbacks for equations certified against a bivariate series
// assignment (variable name -> series).
EliminateOptions bivariate_callbacks(std::vector<std::string> keep,
                                     std::map<std::string, TruncatedSeries> vals,
                                     int order,
                                     std::chrono::milliseconds budget) {
    EliminateOptions eo;
    eo.gb.budget = budget;
    eo.certifies = [vals, order](const Poly& p) {
        return verify_annihilates(p, vals, order);
    };
    eo.condition_rows = [keep, vals, order](const std::vector<Exponents>& mons) {
        std::vector<std::map<int, TruncatedSeries>> pow_cache(keep.size());
        auto power = [&](std::size_t j, int e) -> const TruncatedSeries& {
            auto& cache = pow_cache[j];
            auto it = cache.find(e);
            if (it != cache.end()) return it->second;
            TruncatedSeries s = e == 0 ? TruncatedSeries::constant(1, order)
                                       : vals.at(keep[j]);
            for (int i = 1; i < e; ++i) s = s * vals.at(keep[j]);
            return cache.emplace(e, std::move(s)).first->second;
        };
        std::vector<TruncatedSeries> evs;
        std::set<std::pair<int, int>> key_set;
        for (const Exponents& m : mons) {
            TruncatedSeries s = TruncatedSeries::constant(1, order);
            for (std::size_t j = 0; j < m.size(); ++j)
                if (m[j] != 0) s = s * power(j, m[j]);
            for (const auto& [key, c] : s.terms()) key_set.insert(key);
            evs.push_back(std::move(s));
        }
        std::vector<std::vector<Rational>> rows;
        for (const auto& key : key_set) {
            std::vector<Rational> row;
            for (const auto& s : evs) row.push_back(s.coefficient(key.first, key.second));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    return eo;
}

Poly derive_equation(const WeightSystem& sys, const std::vector<std::string>& keep,
                     const std::map<std::string, TruncatedSeries>& vals,
                     const GenfunOptions& opts) {
    EliminateOptions eo = bivariate_callbacks(keep, vals, opts.order, opts.cas_budget);
    Poly eq = eliminate(system_equations(sys), keep, "f", eo);
    if (!verify_annihilates(eq, vals, opts.order))
        throw DomainError("derived equation fails the series check");
    return eq;
}

// ---- multi-pattern certification over exact truncated polynomials ----

Poly truncate_var(const Poly& p, int var, int max_deg) {
    std::vector<Poly::Term> kept;
    for (const auto& t : p.terms())
        if (t.exp[static_cast<std::size_t>(var)] <= max_deg) kept.push_back(t);
    return Poly::from_terms(p.ring(), std::move(kept));
}

// Joint series sum over trees with at most (order+1)/2 leaves, as a
// polynomial over `ring` (the f variable stays unused).
Poly joint_series(const std::vector<TreePattern>& pats, RingPtr ring, int order) {
    int xl = ring->index_of("x_L");
    std::vector<int> pv;
    for (std::size_t i = 0; i < pats.size(); ++i)
        pv.push_back(ring->index_of("x_p" + std::to_string(i + 1)));
    std::vector<std::unordered_map<const void*, std::int64_t>> memos(pats.size());
    std::map<Exponents, Rational> acc;
    for (int n = 1; 2 * n - 1 <= order; ++n) {
        for (const BinaryTree& T : all_trees(n)) {
            Exponents e(ring->vars.size(), 0);
            e[static_cast<std::size_t>(xl)] = 2 * n - 1;
            for (std::size_t i = 0; i < pats.size(); ++i)
                e[static_cast<std::size_t>(pv[i])] =
                    static_cast<int>(count_copies(T, pats[i], memos[i]));
            acc[e] += 1;
        }
    }
    std::vector<Poly::Term> terms;
    for (auto& [e, c] : acc) terms.push_back({e, c});
    return Poly::from_terms(ring, std::move(terms));
}

EliminateOptions multi_callbacks(RingPtr oring, const Poly& series, int order,
                                 std::chrono::milliseconds budget) {
    int fv = oring->index_of("f");
    int xlv = oring->index_of("x_L");
    auto evaluate = [oring, series, order, fv, xlv](const Poly& p) {
        Poly q = p.ring() == oring ? p : p.mapped_to(oring);
        std::vector<Poly> cs = q.coefficients_in(fv);
        Poly acc = Poly::zero(oring);
        Poly pw = Poly::constant(oring, 1);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i > 0) pw = truncate_var(pw * series, xlv, order);
            acc = acc + truncate_var(cs[i] * pw, xlv, order);
        }
        return truncate_var(acc, xlv, order);
    };
    EliminateOptions eo;
    eo.gb.budget = budget;
    eo.certifies = [evaluate](const Poly& p) { return evaluate(p).is_zero(); };
    eo.condition_rows = [oring, evaluate](const std::vector<Exponents>& mons) {
        std::vector<Poly> evs;
        std::map<Exponents, std::size_t> keys;
        for (const Exponents& m : mons) {
            Poly p = Poly::monomial(oring, m, 1);
            Poly v = evaluate(p);
            for (const auto& t : v.terms()) keys.emplace(t.exp, keys.size());
            evs.push_back(std::move(v));
        }
        std::vector<std::vector<Rational>> rows(keys.size());
        for (auto& row : rows) row.assign(evs.size(), Rational(0));
        for (std::size_t i = 0; i < evs.size(); ++i)
            for (const auto& t : evs[i].terms()) rows[keys.at(t.exp)][i] = t.coef;
        return rows;
    };
    return eo;
}

}  // namespace

TruncatedSeries avoid_series(const BinaryTree& t, int order) {
    if (t.is_leaf()) return TruncatedSeries::zero(order);
    WeightSystem sys = build_avoid_system(pattern_of(t));
    return solve_bivariate(sys, order)[0];
}

std::vector<BigInt> leaf_counts(const BinaryTree& t, int max_leaves) {
    if (max_leaves < 1) return {};
    TruncatedSeries f = avoid_series(t, 2 * max_leaves - 1);
    std::vector<BigInt> out;
    for (int n = 1; n <= max_leaves; ++n) {
        Rational c = f.coefficient(2 * n - 1, 0);
        if (!is_integer(c)) throw DomainError("non-integer avoider count");
        out.push_back(c.get_num());
    }
    return out;
}

TruncatedSeries enumerate_series(const BinaryTree& t, int order) {
    WeightSystem sys = t.is_leaf() ? build_multi_system({TreePattern::blank()})
                                   : build_enumerate_system(pattern_of(t));
    return solve_bivariate(sys, order)[0];
}

Poly avoid_equation(const BinaryTree& t, const GenfunOptions& opts) {
    std::vector<std::string> keep = {"x", "f"};
    if (t.is_leaf()) {
        RingPtr ring = equation_ring(keep);
        return Poly::variable(ring, "f");
    }
    WeightSystem sys = build_avoid_system(pattern_of(t));
    TruncatedSeries F = solve_bivariate(sys, opts.order)[0];
    std::map<std::string, TruncatedSeries> vals = {
        {"x", TruncatedSeries::x(opts.order)}, {"f", F}};
    return derive_equation(sys, keep, vals, opts);
}

Poly enumerate_equation(const BinaryTree& t, const GenfunOptions& opts) {
    std::vector<std::string> keep = {"x", "y", "f"};
    if (t.is_leaf()) {
        Poly m = multi_equation({t}, opts);
        RingPtr ring = equation_ring(keep);
        return renamed(m, {{"x_L", "x"}, {"x_p1", "y"}}, ring).normalized();
    }
    WeightSystem sys = build_enumerate_system(pattern_of(t));
    TruncatedSeries F = solve_bivariate(sys, opts.order)[0];
    std::map<std::string, TruncatedSeries> vals = {
        {"x", TruncatedSeries::x(opts.order)},
        {"y", TruncatedSeries::y(opts.order)},
        {"f", F}};
    return derive_equation(sys, keep, vals, opts);
}

Poly multi_equation(const std::vector<BinaryTree>& patterns, const GenfunOptions& opts) {
    if (patterns.empty()) throw DomainError("need at least one pattern");
    std::vector<TreePattern> pats;
    for (const BinaryTree& tr : patterns) pats.push_back(pattern_of(tr));
    if (pats.size() > 1)
        for (const TreePattern& p : pats)
            if (!p.is_internal())
                throw DomainError("a bare leaf is supported only as the sole pattern");

    WeightSystem sys = build_multi_system(pats);
    std::vector<std::string> keep = {"x_L"};
    for (std::size_t i = 1; i <= pats.size(); ++i)
        keep.push_back("x_p" + std::to_string(i));
    keep.push_back("f");

    int cert_order = std::min(opts.order, 25);
    RingPtr oring = equation_ring(keep);
    Poly series = joint_series(pats, oring, cert_order);
    EliminateOptions eo = multi_callbacks(oring, series, cert_order, opts.cas_budget);
    Poly eq = eliminate(system_equations(sys), keep, "f", eo);
    if (!eo.certifies(eq)) throw DomainError("derived equation fails the series check");
    return eq;
}

std::vector<BigInt> brute_force_avoid_counts(const BinaryTree& t, int max_leaves) {
    TreePattern p = pattern_of(t);
    std::unordered_map<const void*, std::int64_t> memo;
    std::vector<BigInt> out;
    for (int n = 1; n <= max_leaves; ++n) {
        BigInt c = 0;
        for (const BinaryTree& T : all_trees(n))
            if (count_copies(T, p, memo) == 0) ++c;
        out.push_back(c);
    }
    return out;
}

std::vector<std::vector<BigInt>> brute_force_copy_table(const BinaryTree& t,
                                                        int max_leaves) {
    TreePattern p = pattern_of(t);
    std::unordered_map<const void*, std::int64_t> memo;
    std::vector<std::vector<BigInt>> table;
    for (int n = 1; n <= max_leaves; ++n) {
        std::vector<BigInt> row;
        for (const BinaryTree& T : all_trees(n)) {
            auto k = static_cast<std::size_t>(count_copies(T, p, memo));
            if (row.size() <= k) row.resize(k + 1, BigInt(0));
            row[k] += 1;
        }
        table.push_back(std::move(row));
    }
    return table;
}

TruncatedSeries brute_force_enumerate_series(const BinaryTree& t, int max_leaves) {
    int order = 2 * max_leaves - 1;
    auto table = brute_force_copy_table(t, max_leaves);
    TruncatedSeries s = TruncatedSeries::zero(order);
    for (int n = 1; n <= max_leaves; ++n) {
        const auto& row = table[static_cast<std::size_t>(n - 1)];
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0)
                s = s + TruncatedSeries::monomial(2 * n - 1, static_cast<int>(k),
                                                  Rational(row[k]), order);
    }
    return s;
}

}  // namespace treepat
