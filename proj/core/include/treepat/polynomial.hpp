#pragma once

#include <memory>
#include <string>
#include <vector>

#include "treepat/errors.hpp"
#include "treepat/numbers.hpp"

namespace treepat {

using Exponents = std::vector<int>;

// Block monomial order: blocks are compared left to right, each block
// ordering its own variables by graded reverse lexicographic or
// lexicographic comparison. Every ring variable must appear in exactly one
// block.
struct MonomialOrder {
    enum class Kind { GrevLex, Lex };
    struct Block {
        Kind kind;
        std::vector<int> vars;  // ring variable indices
    };
    std::vector<Block> blocks;

    static MonomialOrder grevlex(int nvars);
    static MonomialOrder lex(int nvars);

    // Returns -1, 0 or 1 as a <, =, > b.
    int compare(const Exponents& a, const Exponents& b) const;
};

struct PolyRing {
    std::vector<std::string> vars;
    MonomialOrder order;

    int index_of(const std::string& name) const;  // -1 when absent
    int var_count() const { return static_cast<int>(vars.size()); }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars);  // grevlex
RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order);

// Sparse multivariate polynomial with rational coefficients over a fixed
// ring. Terms are kept sorted descending by the ring's monomial order with
// no zero coefficients, so representation is canonical.
class Poly {
public:
    struct Term {
        Exponents exp;
        Rational coef;
    };

    Poly() = default;  // no ring; usable only as a placeholder

    static Poly zero(RingPtr ring);
    static Poly constant(RingPtr ring, const Rational& c);
    static Poly variable(RingPtr ring, int var);
    static Poly variable(RingPtr ring, const std::string& name);
    static Poly monomial(RingPtr ring, Exponents exp, const Rational& c);
    // Builds from arbitrary (possibly unsorted, repeated) terms.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading_term() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    int degree(int var) const;               // -1 for the zero polynomial
    int total_degree() const;                 // -1 for the zero polynomial
    bool uses_var(int var) const;

    // Coefficient polynomials of powers of `var`: result[d] has var-degree
    // zero and satisfies p = sum_d result[d] * var^d.
    std::vector<Poly> coefficients_in(int var) const;

    // Replaces `var` by `value` (same ring).
    Poly substituted(int var, const Poly& value) const;

    // Reinterprets the polynomial in another ring, matching variables by
    // name. Throws DomainError if a variable in use is absent there.
    Poly mapped_to(RingPtr other) const;

    // Scales so coefficients are coprime integers; the leading coefficient
    // is made positive. Zero stays zero.
    Poly normalized() const;

    Poly monic() const;

    // Canonical text: terms in descending ring order, integer or rational
    // coefficients, e.g. "x^3*f^2 - 2*x*f + 1". Zero prints "0".
    std::string text() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Parses sums of terms like "-3*x^2*y*f^3 + x - 1/2". Accepts parentheses
// for grouping, '+', '-', '*', '^' with nonnegative integer exponents.
Poly parse_poly(RingPtr ring, const std::string& text);

// Remainder of full multivariate division of p by the basis (first
// applicable divisor in list order); no term of the result is divisible by
// any basis leading monomial.
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);

// Quotient when divisor divides p exactly; throws DomainError otherwise.
Poly exact_div(const Poly& p, const Poly& divisor);

// Resultant of a and b with respect to `var` (Sylvester determinant via
// fraction-free elimination).
Poly resultant(const Poly& a, const Poly& b, int var);

}  // namespace treepat
