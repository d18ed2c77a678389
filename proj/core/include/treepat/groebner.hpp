#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include "treepat/polynomial.hpp"

namespace treepat {

struct GroebnerOptions {
    // Wall-clock budget for the completion loop; exceeding it raises
    // ResourceError. Zero disables the Buchberger route entirely (useful for
    // exercising fallbacks).
    std::chrono::milliseconds budget{std::chrono::seconds(60)};
    // Optional hard cap on S-polynomial reductions, for deterministic
    // budget tests. 0 means no cap.
    std::size_t max_reductions = 0;
};

// Reduced Groebner basis of the ideal generated by `gens` under the
// generators' ring order. Deterministic: pair selection uses the sugar
// strategy with ties broken by lcm order and age. Throws ResourceError when
// the budget is exhausted.
std::vector<Poly> groebner(std::vector<Poly> gens, const GroebnerOptions& opts = {});

// True when every S-polynomial of the basis reduces to zero against it.
bool is_groebner_basis(const std::vector<Poly>& basis);

struct EliminateOptions {
    GroebnerOptions gb;
    // Certificate used by the resultant fallback: true when the candidate
    // annihilates the intended power series solution. Candidates failing it
    // are discarded.
    std::function<bool(const Poly&)> certifies;
    // Linear conditions for the low-degree annihilator search used by the
    // fallback: given candidate monomials (exponent vectors over the output
    // ring), returns rows r such that sum_i c_i * r[i] = 0 must hold for
    // coefficients c of any polynomial annihilating the series.
    std::function<std::vector<std::vector<Rational>>(const std::vector<Exponents>&)>
        condition_rows;
};

// One nonzero polynomial of the elimination ideal: the input system with
// all variables outside `keep` eliminated. `keep` lists surviving variables
// least significant first (the last name outranks the rest in the output
// ring's term order). Among Groebner basis members free of eliminated
// variables, the result minimizes the degree in `distinguished`, then the
// term count, and is normalized to coprime integer coefficients with a
// positive leading coefficient.
//
// When the Buchberger route exhausts its budget, falls back to iterated
// resultants (whose outputs still lie in the ideal). With a certificate the
// fallback discards non-annihilating candidates, strips monomial content,
// and searches for a certified divisor of lower distinguished degree.
Poly eliminate(const std::vector<Poly>& system, const std::vector<std::string>& keep,
               const std::string& distinguished, const EliminateOptions& opts = {});

// Basis of the null space of the linear map given by `rows` (each row one
// linear condition over `unknowns` coefficients).
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t unknowns);

}  // namespace treepat
