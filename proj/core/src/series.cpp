#include "treepat/series.hpp"

#include <algorithm>
#include <functional>

namespace treepat {

void TruncatedSeries::add_term(int xe, int ye, const Rational& c) {
    if (xe > order_ || c == 0) return;
    if (xe < 0 || ye < 0) throw DomainError("negative exponent in series");
    auto key = std::make_pair(xe, ye);
    auto it = coef_.find(key);
    if (it == coef_.end()) {
        coef_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) coef_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.add_term(0, 0, c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int xe, int ye, const Rational& c, int order) {
    TruncatedSeries s(order);
    s.add_term(xe, ye, c);
    return s;
}

Rational TruncatedSeries::coefficient(int xe, int ye) const {
    if (xe > order_) throw DomainError("coefficient beyond truncation order");
    auto it = coef_.find({xe, ye});
    return it == coef_.end() ? Rational(0) : it->second;
}

bool TruncatedSeries::uses_y() const {
    for (const auto& [k, c] : coef_)
        if (k.second > 0) return true;
    return false;
}

int TruncatedSeries::x_valuation() const {
    int v = order_ + 1;
    for (const auto& [k, c] : coef_) v = std::min(v, k.first);
    return v;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries out(std::min(order_, o.order_));
    for (const auto& [k, c] : coef_) out.add_term(k.first, k.second, c);
    for (const auto& [k, c] : o.coef_) out.add_term(k.first, k.second, c);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries out(std::min(order_, o.order_));
    for (const auto& [k, c] : coef_) out.add_term(k.first, k.second, c);
    for (const auto& [k, c] : o.coef_) out.add_term(k.first, k.second, -c);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries out(std::min(order_, o.order_));
    for (const auto& [ka, ca] : coef_) {
        if (ka.first > out.order_) break;
        for (const auto& [kb, cb] : o.coef_) {
            if (ka.first + kb.first > out.order_) break;
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries out(order_);
    if (c == 0) return out;
    for (const auto& [k, v] : coef_) out.coef_.emplace(k, v * c);
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    TruncatedSeries out(new_order);
    for (const auto& [k, c] : coef_) out.add_term(k.first, k.second, c);
    return out;
}

std::vector<Rational> TruncatedSeries::x_coefficients() const {
    std::vector<Rational> out(static_cast<std::size_t>(order_) + 1, Rational(0));
    for (const auto& [k, c] : coef_) {
        if (k.second != 0) throw DomainError("series involves y");
        out[static_cast<std::size_t>(k.first)] = c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::at_y_one() const {
    TruncatedSeries out(order_);
    for (const auto& [k, c] : coef_) out.add_term(k.first, 0, c);
    return out;
}

std::string TruncatedSeries::text() const {
    if (coef_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : coef_) {
        Rational v = c;
        if (first) {
            if (v < 0) {
                out += '-';
                v = -v;
            }
            first = false;
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        std::string mono;
        if (k.first > 0) {
            mono += "x";
            if (k.first > 1) mono += "^" + std::to_string(k.first);
        }
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (k.second > 1) mono += "^" + std::to_string(k.second);
        }
        if (mono.empty()) {
            out += to_string(v);
        } else {
            if (v != 1) out += to_string(v) + "*";
            out += mono;
        }
    }
    return out;
}

TruncatedSeries evaluate_poly(const Poly& p,
                              const std::map<int, TruncatedSeries>& assignment,
                              int order) {
    std::map<std::pair<int, int>, TruncatedSeries> power_cache;
    auto power = [&](int var, int exp) -> const TruncatedSeries& {
        auto key = std::make_pair(var, exp);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        auto base_it = assignment.find(var);
        if (base_it == assignment.end())
            throw DomainError("variable '" + p.ring()->vars[static_cast<std::size_t>(var)] +
                              "' not assigned");
        TruncatedSeries acc = base_it->second.truncated(order);
        for (int i = 1; i < exp; ++i) acc = acc * base_it->second;
        return power_cache.emplace(key, std::move(acc)).first->second;
    };

    TruncatedSeries out(order);
    for (const auto& t : p.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(t.coef, order);
        for (std::size_t v = 0; v < t.exp.size(); ++v)
            if (t.exp[v] > 0) term = term * power(static_cast<int>(v), t.exp[v]);
        out = out + term;
    }
    return out;
}

bool verify_annihilates(const Poly& p,
                        const std::map<std::string, TruncatedSeries>& by_name,
                        int order) {
    std::map<int, TruncatedSeries> assignment;
    for (const auto& [name, s] : by_name) {
        int idx = p.ring()->index_of(name);
        if (idx >= 0) assignment.emplace(idx, s);
    }
    return evaluate_poly(p, assignment, order).is_zero();
}

std::vector<TruncatedSeries> series_solve(const SeriesSystem& sys,
                                          const std::map<int, TruncatedSeries>& params,
                                          int order) {
    const std::size_t n = sys.unknown_vars.size();
    if (sys.rhs.size() != n) throw DomainError("unknown/equation count mismatch");
    std::vector<int> unknown_of(sys.ring->vars.size(), -1);
    for (std::size_t i = 0; i < n; ++i) {
        int v = sys.unknown_vars[i];
        if (v < 0 || v >= sys.ring->var_count() || unknown_of[v] >= 0)
            throw DomainError("invalid unknown list");
        unknown_of[v] = static_cast<int>(i);
    }
    for (std::size_t v = 0; v < sys.ring->vars.size(); ++v)
        if (unknown_of[v] < 0 && !params.count(static_cast<int>(v))) {
            bool used = false;
            for (const auto& p : sys.rhs)
                if (p.uses_var(static_cast<int>(v))) used = true;
            if (used)
                throw DomainError("variable '" + sys.ring->vars[v] +
                                  "' neither unknown nor parameter");
        }

    // Contraction check: around any cycle of unknown dependences at least
    // one power of x must be gained. Edge weights count only the parameter
    // content of each monomial, a conservative lower bound.
    std::vector<std::vector<int>> zero_edges(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& t : sys.rhs[i].terms()) {
            long weight = 0;
            bool dead = false;
            for (std::size_t v = 0; v < t.exp.size() && !dead; ++v) {
                if (t.exp[v] == 0 || unknown_of[v] >= 0) continue;
                const TruncatedSeries& s = params.at(static_cast<int>(v));
                if (s.is_zero())
                    dead = true;
                else
                    weight += static_cast<long>(t.exp[v]) * s.x_valuation();
            }
            if (dead || weight > 0) continue;
            for (std::size_t v = 0; v < t.exp.size(); ++v)
                if (t.exp[v] > 0 && unknown_of[v] >= 0)
                    zero_edges[i].push_back(unknown_of[v]);
        }
    }
    {
        // Cycle detection on the zero-weight dependence graph.
        std::vector<int> state(n, 0);
        std::function<void(std::size_t)> dfs = [&](std::size_t u) {
            state[u] = 1;
            for (int w : zero_edges[u]) {
                if (state[w] == 1)
                    throw DomainError(
                        "fixed-point system is not contractive in x");
                if (state[w] == 0) dfs(static_cast<std::size_t>(w));
            }
            state[u] = 2;
        };
        for (std::size_t i = 0; i < n; ++i)
            if (state[i] == 0) dfs(i);
    }

    std::vector<TruncatedSeries> cur(n, TruncatedSeries::zero(order));
    std::map<int, TruncatedSeries> assignment = params;
    long max_rounds = (static_cast<long>(order) + 2) * (static_cast<long>(n) + 1) + 2;
    for (long round = 0; round < max_rounds; ++round) {
        for (std::size_t i = 0; i < n; ++i)
            assignment.insert_or_assign(sys.unknown_vars[i], cur[i]);
        std::vector<TruncatedSeries> next;
        next.reserve(n);
        bool stable = true;
        for (std::size_t i = 0; i < n; ++i) {
            next.push_back(evaluate_poly(sys.rhs[i], assignment, order));
            if (!(next.back() == cur[i])) stable = false;
        }
        cur = std::move(next);
        if (stable) return cur;
    }
    throw ResourceError("fixed-point iteration did not stabilize");
}

}  // namespace treepat
