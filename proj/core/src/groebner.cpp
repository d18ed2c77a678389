#include "treepat/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treepat {

namespace {

using Clock = std::chrono::steady_clock;

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
    Exponents e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
    return e;
}

bool disjoint_exp(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

bool divides_exp(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

int exp_total(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

struct Pair {
    std::size_t i, j;
    Exponents lcm;
    int sugar;
};

Poly s_poly(const Poly& f, const Poly& g, const Exponents& lcm) {
    const auto& lf = f.leading_term();
    const auto& lg = g.leading_term();
    Exponents ef(lcm.size()), eg(lcm.size());
    for (std::size_t v = 0; v < lcm.size(); ++v) {
        ef[v] = lcm[v] - lf.exp[v];
        eg[v] = lcm[v] - lg.exp[v];
    }
    return f * Poly::monomial(f.ring(), std::move(ef), Rational(1) / lf.coef) -
           g * Poly::monomial(g.ring(), std::move(eg), Rational(1) / lg.coef);
}

}  // namespace

std::vector<Poly> groebner(std::vector<Poly> gens, const GroebnerOptions& opts) {
    std::vector<Poly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return basis;
    RingPtr ring = basis.front().ring();
    for (const auto& g : basis)
        if (g.ring() != ring) throw DomainError("generators from different rings");

    if (opts.budget.count() <= 0) throw ResourceError("basis computation budget exhausted");
    auto deadline = Clock::now() + opts.budget;

    auto sugar_of = [&](const Poly& p) { return p.total_degree(); };
    std::vector<int> sugar;
    for (const auto& g : basis) sugar.push_back(sugar_of(g));

    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Exponents l = lcm_exp(basis[i].leading_term().exp, basis[j].leading_term().exp);
            int s = std::max(sugar[i] + exp_total(l) - exp_total(basis[i].leading_term().exp),
                             sugar[j] + exp_total(l) - exp_total(basis[j].leading_term().exp));
            queue.push_back({i, j, std::move(l), s});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ring->order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };

    std::size_t reductions = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pr = std::move(*it);
        queue.erase(it);
        handled.insert({pr.i, pr.j});

        // Product criterion: coprime leading monomials reduce to zero.
        if (disjoint_exp(basis[pr.i].leading_term().exp, basis[pr.j].leading_term().exp))
            continue;
        // Chain criterion: a third element dividing the lcm whose pairs with
        // both ends were already treated makes this pair redundant.
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides_exp(basis[k].leading_term().exp, pr.lcm)) continue;
            auto k1 = std::minmax(pr.i, k);
            auto k2 = std::minmax(pr.j, k);
            if (handled.count(k1) && handled.count(k2)) redundant = true;
        }
        if (redundant) continue;

        if (Clock::now() > deadline) throw ResourceError("basis computation budget exhausted");
        if (opts.max_reductions && reductions >= opts.max_reductions)
            throw ResourceError("basis computation budget exhausted");
        ++reductions;

        Poly r = normal_form(s_poly(basis[pr.i], basis[pr.j], pr.lcm), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        sugar.push_back(sugar_of(r));
        push_pairs(basis.size() - 1);
    }

    // Minimalize: drop members whose leading monomial another divides.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            const auto& li = basis[i].leading_term().exp;
            const auto& lj = basis[j].leading_term().exp;
            if (divides_exp(lj, li) && (lj != li || j < i)) keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }
    // Interreduce to the unique reduced basis.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], others).monic();
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return ring->order.compare(a.leading_term().exp, b.leading_term().exp) < 0;
    });
    return minimal;
}

bool is_groebner_basis(const std::vector<Poly>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Exponents l = lcm_exp(basis[i].leading_term().exp, basis[j].leading_term().exp);
            if (!normal_form(s_poly(basis[i], basis[j], l), basis).is_zero()) return false;
        }
    return true;
}

namespace {

// Exact ideal-preserving preprocessing: repeatedly substitute away an
// eliminated variable that some equation pins linearly with a constant
// coefficient (c*v + rest with v absent from rest).
void substitution_pass(std::vector<Poly>& system, std::vector<int>& to_eliminate) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t ei = 0; ei < system.size() && !progress; ++ei) {
            const Poly& eq = system[ei];
            if (eq.is_zero()) continue;
            for (std::size_t vi = 0; vi < to_eliminate.size() && !progress; ++vi) {
                int v = to_eliminate[vi];
                if (eq.degree(v) != 1) continue;
                auto coefs = eq.coefficients_in(v);
                if (coefs[1].total_degree() != 0) continue;
                Rational c = coefs[1].leading_term().coef;
                Poly value = coefs[0] * (Rational(-1) / c);
                std::vector<Poly> next;
                for (std::size_t j = 0; j < system.size(); ++j) {
                    if (j == ei) continue;
                    Poly s = system[j].substituted(v, value);
                    if (!s.is_zero()) next.push_back(std::move(s));
                }
                system = std::move(next);
                to_eliminate.erase(to_eliminate.begin() + static_cast<std::ptrdiff_t>(vi));
                progress = true;
            }
        }
    }
}

void require_time(Clock::time_point deadline) {
    if (Clock::now() > deadline) throw ResourceError("elimination budget exhausted");
}

// Iterated resultants: each step eliminates one variable, pairing a pivot
// equation with every other equation mentioning that variable. Every output
// lies in the ideal generated by its inputs.
std::vector<Poly> resultant_cascade(std::vector<Poly> system, std::vector<int> to_eliminate,
                                    Clock::time_point deadline) {
    while (!to_eliminate.empty()) {
        std::size_t best = 0;
        int best_occ = -1, best_deg = -1;
        for (std::size_t vi = 0; vi < to_eliminate.size(); ++vi) {
            int v = to_eliminate[vi];
            int occ = 0, deg = 0;
            for (const auto& p : system)
                if (p.uses_var(v)) {
                    ++occ;
                    deg = std::max(deg, p.degree(v));
                }
            if (occ == 0) continue;
            if (best_occ < 0 || occ < best_occ || (occ == best_occ && deg < best_deg)) {
                best = vi;
                best_occ = occ;
                best_deg = deg;
            }
        }
        if (best_occ < 0) break;  // no remaining equation mentions any eliminated var
        int v = to_eliminate[best];
        to_eliminate.erase(to_eliminate.begin() + static_cast<std::ptrdiff_t>(best));

        std::vector<Poly> with_v, rest;
        for (auto& p : system)
            (p.uses_var(v) ? with_v : rest).push_back(std::move(p));
        std::sort(with_v.begin(), with_v.end(), [v](const Poly& a, const Poly& b) {
            if (a.degree(v) != b.degree(v)) return a.degree(v) < b.degree(v);
            return a.terms().size() < b.terms().size();
        });
        for (std::size_t i = 1; i < with_v.size(); ++i) {
            require_time(deadline);
            Poly r = resultant(with_v[0], with_v[i], v).normalized();
            if (!r.is_zero()) rest.push_back(std::move(r));
        }
        system = std::move(rest);
    }
    return system;
}

bool contains_only(const Poly& p, const std::vector<char>& allowed) {
    for (const auto& t : p.terms())
        for (std::size_t v = 0; v < t.exp.size(); ++v)
            if (t.exp[v] > 0 && !allowed[v]) return false;
    return true;
}

// Divides out the monomial gcd of all terms.
Poly strip_monomial_content(const Poly& p) {
    if (p.is_zero()) return p;
    Exponents gcd = p.terms().front().exp;
    for (const auto& t : p.terms())
        for (std::size_t v = 0; v < gcd.size(); ++v) gcd[v] = std::min(gcd[v], t.exp[v]);
    if (exp_total(gcd) == 0) return p;
    std::vector<Poly::Term> terms;
    for (const auto& t : p.terms()) {
        Poly::Term u = t;
        for (std::size_t v = 0; v < gcd.size(); ++v) u.exp[v] -= gcd[v];
        terms.push_back(std::move(u));
    }
    return Poly::from_terms(p.ring(), std::move(terms));
}

bool divides_poly(const Poly& divisor, const Poly& p) {
    return normal_form(p, {divisor}).is_zero();
}

}  // namespace

Poly eliminate(const std::vector<Poly>& system_in, const std::vector<std::string>& keep,
               const std::string& distinguished, const EliminateOptions& opts) {
    if (system_in.empty()) throw DomainError("empty system");
    RingPtr src = system_in.front().ring();
    for (const auto& p : system_in)
        if (p.ring() != src) throw DomainError("system spans different rings");
    std::vector<char> keep_mask(src->vars.size(), 0);
    for (const auto& name : keep) {
        int idx = src->index_of(name);
        if (idx < 0) throw DomainError("kept variable '" + name + "' not in ring");
        keep_mask[idx] = 1;
    }
    if (src->index_of(distinguished) < 0)
        throw DomainError("distinguished variable not in ring");

    // Elimination ring: eliminated variables form a leading grevlex block,
    // kept variables follow as singleton blocks, most significant last in
    // `keep` order.
    std::vector<std::string> elim_names;
    for (std::size_t v = 0; v < src->vars.size(); ++v)
        if (!keep_mask[v]) elim_names.push_back(src->vars[v]);
    std::vector<std::string> ring_vars = elim_names;
    for (auto it = keep.rbegin(); it != keep.rend(); ++it) ring_vars.push_back(*it);
    MonomialOrder order;
    if (!elim_names.empty()) {
        MonomialOrder::Block blk;
        blk.kind = MonomialOrder::Kind::GrevLex;
        for (std::size_t i = 0; i < elim_names.size(); ++i)
            blk.vars.push_back(static_cast<int>(i));
        order.blocks.push_back(std::move(blk));
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        MonomialOrder::Block blk;
        blk.kind = MonomialOrder::Kind::Lex;
        blk.vars.push_back(static_cast<int>(elim_names.size() + i));
        order.blocks.push_back(std::move(blk));
    }
    RingPtr elim_ring = make_ring(ring_vars, std::move(order));

    std::vector<Poly> system;
    for (const auto& p : system_in) {
        Poly q = p.mapped_to(elim_ring);
        if (!q.is_zero()) system.push_back(std::move(q));
    }
    std::vector<int> to_eliminate;
    for (std::size_t i = 0; i < elim_names.size(); ++i)
        to_eliminate.push_back(static_cast<int>(i));

    substitution_pass(system, to_eliminate);
    if (system.empty()) throw DomainError("elimination ideal is trivial");

    std::vector<char> allowed(elim_ring->vars.size(), 1);
    for (int v : to_eliminate) allowed[v] = 0;
    int dist = elim_ring->index_of(distinguished);

    // Output ring over exactly the kept variables, last keep entry most
    // significant.
    MonomialOrder out_order;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        MonomialOrder::Block blk;
        blk.kind = MonomialOrder::Kind::Lex;
        blk.vars.push_back(static_cast<int>(keep.size() - 1 - i));
        out_order.blocks.push_back(std::move(blk));
    }
    RingPtr out_ring = make_ring(keep, std::move(out_order));
    int out_dist = out_ring->index_of(distinguished);

    auto pick_minimal = [&](const std::vector<Poly>& cands) -> std::optional<Poly> {
        std::optional<Poly> best;
        for (const auto& c : cands) {
            if (c.is_zero() || !contains_only(c, allowed)) continue;
            if (!best) {
                best = c;
                continue;
            }
            int dc = c.degree(dist), db = best->degree(dist);
            if (dc < db || (dc == db && c.terms().size() < best->terms().size())) best = c;
        }
        return best;
    };

    if (to_eliminate.empty()) {
        auto best = pick_minimal(system);
        if (!best) throw DomainError("elimination ideal is trivial");
        return best->mapped_to(out_ring).normalized();
    }

    // The basis computation gets half the budget so the resultant fallback
    // keeps a share; the deadline bounds the whole derivation.
    const auto deadline = Clock::now() + opts.gb.budget;
    try {
        GroebnerOptions gb = opts.gb;
        gb.budget = opts.gb.budget / 2;
        std::vector<Poly> basis = groebner(system, gb);
        auto best = pick_minimal(basis);
        if (!best) throw DomainError("elimination ideal is trivial");
        return best->mapped_to(out_ring).normalized();
    } catch (const ResourceError&) {
        // Fall back to iterated resultants.
    }

    std::vector<Poly> cascade = resultant_cascade(system, to_eliminate, deadline);
    std::vector<Poly> usable;
    for (auto& c : cascade) {
        if (c.is_zero() || !contains_only(c, allowed)) continue;
        Poly n = strip_monomial_content(c.mapped_to(out_ring)).normalized();
        if (n.is_zero()) continue;
        require_time(deadline);
        if (opts.certifies && !opts.certifies(n)) continue;
        usable.push_back(std::move(n));
    }
    if (usable.empty()) throw ResourceError("elimination failed within budget");
    std::sort(usable.begin(), usable.end(), [&](const Poly& a, const Poly& b) {
        int da = a.degree(out_dist), db = b.degree(out_dist);
        if (da != db) return da < db;
        return a.terms().size() < b.terms().size();
    });
    Poly best = usable.front();

    // Search for a certified divisor of lower distinguished degree: the
    // minimal polynomial of the series divides every annihilating candidate,
    // and its per-variable degrees are bounded by the candidate's.
    if (opts.condition_rows && opts.certifies && best.degree(out_dist) > 1) {
        std::vector<int> bound(out_ring->vars.size(), 0);
        for (const auto& t : best.terms())
            for (std::size_t v = 0; v < t.exp.size(); ++v)
                bound[v] = std::max(bound[v], t.exp[v]);
        for (int d = 1; d < best.degree(out_dist); ++d) {
            require_time(deadline);
            std::vector<Exponents> monos;
            Exponents cur(out_ring->vars.size(), 0);
            std::function<void(std::size_t)> gen = [&](std::size_t v) {
                if (v == cur.size()) {
                    monos.push_back(cur);
                    return;
                }
                int hi = static_cast<int>(v) == out_dist ? d : bound[v];
                for (int e = 0; e <= hi; ++e) {
                    cur[v] = e;
                    gen(v + 1);
                }
                cur[v] = 0;
            };
            gen(0);
            if (monos.size() > 3000) break;
            auto rows = opts.condition_rows(monos);
            auto null_basis = nullspace(std::move(rows), monos.size());
            std::vector<Poly> found;
            for (const auto& vec : null_basis) {
                std::vector<Poly::Term> terms;
                for (std::size_t i = 0; i < monos.size(); ++i)
                    if (vec[i] != 0) terms.push_back({monos[i], vec[i]});
                Poly p = Poly::from_terms(out_ring, std::move(terms));
                if (!p.is_zero() && p.degree(out_dist) >= 1) found.push_back(p.normalized());
            }
            std::sort(found.begin(), found.end(), [&](const Poly& a, const Poly& b) {
                return a.terms().size() < b.terms().size();
            });
            bool done = false;
            for (const auto& p : found) {
                require_time(deadline);
                if (divides_poly(p, best) && opts.certifies(p)) {
                    best = p;
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
    }
    return best;
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t unknowns) {
    std::size_t nr = rows.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < nr; ++c) {
        std::size_t sel = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == nr) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = Rational(1) / rows[r][c];
        for (std::size_t j = c; j < unknowns; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < unknowns; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(unknowns, 0);
    for (std::size_t c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t c = 0; c < unknowns; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> v(unknowns, Rational(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace treepat
