#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "treepat/polynomial.hpp"

namespace treepat {

// Bivariate power series in x and y, truncated in x: terms with x-exponent
// above `order` are dropped (y-exponents are never truncated). Coefficients
// are exact rationals. The zero series of a given order is the additive
// identity; arithmetic truncates to the smaller operand order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : order_(order) {
        if (order < 0) throw DomainError("negative truncation order");
    }

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries monomial(int xe, int ye, const Rational& c, int order);
    static TruncatedSeries x(int order) { return monomial(1, 0, 1, order); }
    static TruncatedSeries y(int order) { return monomial(0, 1, 1, order); }

    int order() const { return order_; }
    const std::map<std::pair<int, int>, Rational>& terms() const { return coef_; }

    Rational coefficient(int xe, int ye) const;
    bool is_zero() const { return coef_.empty(); }
    bool uses_y() const;

    // Smallest x-exponent with a nonzero coefficient; order()+1 when zero.
    int x_valuation() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& c) const;
    bool operator==(const TruncatedSeries& o) const {
        return order_ == o.order_ && coef_ == o.coef_;
    }

    TruncatedSeries truncated(int new_order) const;

    // Coefficients of x^0..x^order; requires a series free of y.
    std::vector<Rational> x_coefficients() const;

    // Substitutes y := 1, summing coefficients per x-power.
    TruncatedSeries at_y_one() const;

    std::string text() const;

private:
    int order_;
    std::map<std::pair<int, int>, Rational> coef_;  // (x exponent, y exponent)

    void add_term(int xe, int ye, const Rational& c);
};

// Evaluates p with every used variable bound to a series, truncating at
// `order`.
TruncatedSeries evaluate_poly(const Poly& p,
                              const std::map<int, TruncatedSeries>& assignment,
                              int order);

// True when p evaluates to the zero series under the assignment (variables
// matched by name), checked through x-order `order`.
bool verify_annihilates(const Poly& p,
                        const std::map<std::string, TruncatedSeries>& by_name,
                        int order);

// Fixed-point system: unknown_vars[i] is defined by the polynomial rhs[i];
// all other ring variables must be bound in `params`.
struct SeriesSystem {
    RingPtr ring;
    std::vector<int> unknown_vars;
    std::vector<Poly> rhs;
};

// Solves the system by simultaneous fixed-point iteration from zero. Every
// dependence of an unknown on an unknown must gain at least one power of x
// around any cycle (checked conservatively through the monomials' parameter
// content before iterating; violations raise DomainError). The result is
// independent of equation order.
std::vector<TruncatedSeries> series_solve(const SeriesSystem& sys,
                                          const std::map<int, TruncatedSeries>& params,
                                          int order);

}  // namespace treepat
