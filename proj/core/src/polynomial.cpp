#include "treepat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace treepat {

MonomialOrder MonomialOrder::grevlex(int nvars) {
    MonomialOrder o;
    Block b;
    b.kind = Kind::GrevLex;
    for (int i = 0; i < nvars; ++i) b.vars.push_back(i);
    o.blocks.push_back(std::move(b));
    return o;
}

MonomialOrder MonomialOrder::lex(int nvars) {
    MonomialOrder o;
    Block b;
    b.kind = Kind::Lex;
    for (int i = 0; i < nvars; ++i) b.vars.push_back(i);
    o.blocks.push_back(std::move(b));
    return o;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    for (const Block& blk : blocks) {
        if (blk.kind == Kind::GrevLex) {
            long da = 0, db = 0;
            for (int v : blk.vars) {
                da += a[v];
                db += b[v];
            }
            if (da != db) return da < db ? -1 : 1;
            // Reverse lexicographic on the block: the *last* variable with a
            // differing exponent decides, larger exponent losing.
            for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it) {
                if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
            }
        } else {
            for (int v : blk.vars) {
                if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
            }
        }
    }
    return 0;
}

int PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

void validate_order(const PolyRing& ring) {
    std::vector<char> seen(ring.vars.size(), 0);
    for (const auto& blk : ring.order.blocks)
        for (int v : blk.vars) {
            if (v < 0 || v >= ring.var_count() || seen[v])
                throw DomainError("monomial order must cover each variable once");
            seen[v] = 1;
        }
    for (char c : seen)
        if (!c) throw DomainError("monomial order must cover each variable once");
    std::set<std::string> names(ring.vars.begin(), ring.vars.end());
    if (names.size() != ring.vars.size())
        throw DomainError("duplicate variable name in ring");
}

}  // namespace

RingPtr make_ring(std::vector<std::string> vars) {
    MonomialOrder o = MonomialOrder::grevlex(static_cast<int>(vars.size()));
    return make_ring(std::move(vars), std::move(o));
}

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order) {
    auto ring = std::make_shared<PolyRing>();
    ring->vars = std::move(vars);
    ring->order = std::move(order);
    validate_order(*ring);
    return ring;
}

namespace {

struct ExpLess {
    const PolyRing* ring;
    bool operator()(const Exponents& a, const Exponents& b) const {
        return ring->order.compare(a, b) < 0;
    }
};

void require_same_ring(const Poly& a, const Poly& b) {
    if (a.ring() != b.ring())
        throw DomainError("polynomials from different rings");
}

}  // namespace

Poly Poly::zero(RingPtr ring) {
    Poly p;
    p.ring_ = std::move(ring);
    return p;
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
    return monomial(std::move(ring), Exponents(), c);
}

Poly Poly::variable(RingPtr ring, int var) {
    if (var < 0 || var >= ring->var_count()) throw DomainError("variable index out of range");
    Exponents e(ring->var_count(), 0);
    e[var] = 1;
    return monomial(std::move(ring), std::move(e), 1);
}

Poly Poly::variable(RingPtr ring, const std::string& name) {
    int idx = ring->index_of(name);
    if (idx < 0) throw DomainError("unknown variable '" + name + "'");
    return variable(std::move(ring), idx);
}

Poly Poly::monomial(RingPtr ring, Exponents exp, const Rational& c) {
    Poly p;
    p.ring_ = std::move(ring);
    exp.resize(p.ring_->var_count(), 0);
    if (c != 0) p.terms_.push_back({std::move(exp), c});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<Exponents, Rational, ExpLess> acc{ExpLess{ring.get()}};
    for (auto& t : terms) {
        t.exp.resize(ring->var_count(), 0);
        auto [it, fresh] = acc.emplace(std::move(t.exp), t.coef);
        if (!fresh) it->second += t.coef;
    }
    Poly p;
    p.ring_ = std::move(ring);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) p.terms_.push_back({it->first, it->second});
    return p;
}

const Poly::Term& Poly::leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_.front();
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(*this, o);
    Poly out;
    out.ring_ = ring_;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int cmp = ring_->order.compare(terms_[i].exp, o.terms_[j].exp);
        if (cmp > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].coef + o.terms_[j].coef;
            if (c != 0) out.terms_.push_back({terms_[i].exp, std::move(c)});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.terms_.push_back(o.terms_[j++]);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(*this, o);
    std::map<Exponents, Rational, ExpLess> acc{ExpLess{ring_.get()}};
    const int nv = ring_->var_count();
    Exponents e(nv);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            for (int v = 0; v < nv; ++v) e[v] = a.exp[v] + b.exp[v];
            Rational prod = a.coef * b.coef;
            auto [it, fresh] = acc.emplace(e, prod);
            if (!fresh) it->second += prod;
        }
    Poly out;
    out.ring_ = ring_;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) out.terms_.push_back({it->first, it->second});
    return out;
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return zero(ring_);
    Poly p = *this;
    for (auto& t : p.terms_) t.coef *= c;
    return p;
}

bool Poly::operator==(const Poly& o) const {
    require_same_ring(*this, o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

int Poly::degree(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.exp[var]);
    return d;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, std::accumulate(t.exp.begin(), t.exp.end(), 0));
    return d;
}

bool Poly::uses_var(int var) const {
    for (const auto& t : terms_)
        if (t.exp[var] > 0) return true;
    return false;
}

std::vector<Poly> Poly::coefficients_in(int var) const {
    int d = degree(var);
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(d, 0)) + 1);
    for (const auto& t : terms_) {
        Term u = t;
        int p = u.exp[var];
        u.exp[var] = 0;
        buckets[p].push_back(std::move(u));
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(ring_, std::move(b)));
    return out;
}

Poly Poly::substituted(int var, const Poly& value) const {
    require_same_ring(*this, value);
    std::vector<Poly> coefs = coefficients_in(var);
    Poly out = zero(ring_);
    for (auto it = coefs.rbegin(); it != coefs.rend(); ++it)
        out = out * value + *it;
    return out;
}

Poly Poly::mapped_to(RingPtr other) const {
    std::vector<int> map(ring_->vars.size());
    for (std::size_t v = 0; v < ring_->vars.size(); ++v) {
        map[v] = other->index_of(ring_->vars[v]);
        if (map[v] < 0 && uses_var(static_cast<int>(v)))
            throw DomainError("variable '" + ring_->vars[v] + "' missing in target ring");
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term u;
        u.exp.assign(other->var_count(), 0);
        u.coef = t.coef;
        for (std::size_t v = 0; v < map.size(); ++v)
            if (t.exp[v] > 0) u.exp[map[v]] = t.exp[v];
        terms.push_back(std::move(u));
    }
    return from_terms(std::move(other), std::move(terms));
}

Poly Poly::normalized() const {
    if (terms_.empty()) return *this;
    BigInt den = 1;
    for (const auto& t : terms_) {
        BigInt d = t.coef.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    BigInt num = 0;
    for (const auto& t : terms_) {
        BigInt n = t.coef.get_num() * (den / t.coef.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale = make_rational(den, num);
    if (terms_.front().coef * scale < 0) scale = -scale;
    return *this * scale;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / terms_.front().coef);
}

std::string Poly::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coef;
        if (i == 0) {
            if (c < 0) {
                out += '-';
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        bool has_vars = false;
        std::string vars;
        for (std::size_t v = 0; v < t.exp.size(); ++v) {
            if (t.exp[v] == 0) continue;
            if (has_vars) vars += '*';
            vars += ring_->vars[v];
            if (t.exp[v] > 1) vars += '^' + std::to_string(t.exp[v]);
            has_vars = true;
        }
        if (!has_vars) {
            out += to_string(c);
        } else {
            if (c != 1) {
                out += to_string(c);
                out += '*';
            }
            out += vars;
        }
    }
    return out;
}

namespace {

// Recursive-descent parser for polynomial expressions.
struct PolyParser {
    RingPtr ring;
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Poly parse_expr() {
        Poly p = eat('-') ? -parse_term() : parse_term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                p = p + parse_term();
            else if (eat('-'))
                p = p - parse_term();
            else
                return p;
        }
    }

    Poly parse_term() {
        Poly p = parse_power();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                p = p * parse_power();
            } else if (pos < text.size() &&
                       (text[pos] == '(' || std::isalpha(static_cast<unsigned char>(text[pos])))) {
                // implicit multiplication, e.g. "2x" or "x(y+1)"
                p = p * parse_power();
            } else {
                return p;
            }
        }
    }

    Poly parse_power() {
        Poly base = parse_atom();
        skip_ws();
        if (eat('^')) {
            long e = parse_int();
            if (e < 0) throw ParseError("negative exponent", pos);
            Poly out = Poly::constant(ring, 1);
            for (long i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Poly p = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string num = text.substr(start, pos - start);
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                std::size_t save = pos;
                ++pos;
                skip_ws();
                if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    std::size_t dstart = pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                    return Poly::constant(
                        ring, rational_from_string(num + "/" + text.substr(dstart, pos - dstart)));
                }
                pos = save;
            }
            return Poly::constant(ring, rational_from_string(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            int idx = ring->index_of(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            return Poly::variable(ring, idx);
        }
        throw ParseError("unexpected character", pos);
    }

    long parse_int() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }
};

}  // namespace

Poly parse_poly(RingPtr ring, const std::string& text) {
    PolyParser p{ring, text};
    Poly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return out;
}

namespace {

bool divides_exp(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
    Poly rest = p;
    std::vector<Poly::Term> remainder;
    while (!rest.is_zero()) {
        const Poly::Term& lt = rest.leading_term();
        bool reduced = false;
        for (const Poly& g : basis) {
            if (g.is_zero()) continue;
            const Poly::Term& gl = g.leading_term();
            if (!divides_exp(gl.exp, lt.exp)) continue;
            Exponents q(lt.exp.size());
            for (std::size_t v = 0; v < q.size(); ++v) q[v] = lt.exp[v] - gl.exp[v];
            rest = rest - g * Poly::monomial(p.ring(), std::move(q), lt.coef / gl.coef);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lt);
            rest = rest - Poly::monomial(p.ring(), lt.exp, lt.coef);
        }
    }
    return Poly::from_terms(p.ring(), std::move(remainder));
}

Poly exact_div(const Poly& p, const Poly& divisor) {
    if (divisor.is_zero()) throw DomainError("division by zero polynomial");
    Poly rest = p;
    std::vector<Poly::Term> quot;
    const Poly::Term& dl = divisor.leading_term();
    while (!rest.is_zero()) {
        const Poly::Term& lt = rest.leading_term();
        if (!divides_exp(dl.exp, lt.exp)) throw DomainError("inexact polynomial division");
        Exponents q(lt.exp.size());
        for (std::size_t v = 0; v < q.size(); ++v) q[v] = lt.exp[v] - dl.exp[v];
        Rational c = lt.coef / dl.coef;
        rest = rest - divisor * Poly::monomial(p.ring(), q, c);
        quot.push_back({std::move(q), std::move(c)});
    }
    return Poly::from_terms(p.ring(), std::move(quot));
}

Poly resultant(const Poly& a, const Poly& b, int var) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.ring());
    int da = a.degree(var), db = b.degree(var);
    if (da == 0 && db == 0) throw DomainError("resultant of constants in the variable");
    RingPtr ring = a.ring();
    std::vector<Poly> ca = a.coefficients_in(var);
    std::vector<Poly> cb = b.coefficients_in(var);
    if (da == 0) {
        // res(a, b) = a^deg(b)
        Poly out = Poly::constant(ring, 1);
        for (int i = 0; i < db; ++i) out = out * a;
        return out;
    }
    if (db == 0) {
        Poly out = Poly::constant(ring, 1);
        for (int i = 0; i < da; ++i) out = out * b;
        return out;
    }

    int n = da + db;
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly::zero(ring)));
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= da; ++j) m[r][r + j] = ca[da - j];
    for (int r = 0; r < da; ++r)
        for (int j = 0; j <= db; ++j) m[db + r][r + j] = cb[db - j];

    // Fraction-free (Bareiss) elimination; all divisions are exact.
    Poly denom = Poly::constant(ring, 1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) {
                    swap = r;
                    break;
                }
            if (swap < 0) return Poly::zero(ring);
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                Poly num = m[k][k] * m[r][c] - m[r][k] * m[k][c];
                m[r][c] = exact_div(num, denom);
            }
            m[r][k] = Poly::zero(ring);
        }
        denom = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace treepat
