#pragma once

#include <chrono>
#include <vector>

#include "treepat/numbers.hpp"
#include "treepat/polynomial.hpp"
#include "treepat/series.hpp"
#include "treepat/tree.hpp"

namespace treepat {

struct GenfunOptions {
    // x-truncation order used when solving series and certifying equations.
    int order = 31;
    // Wall-clock budget for the algebraic elimination.
    std::chrono::milliseconds cas_budget{std::chrono::seconds(60)};
};

// Generating function of the trees avoiding t, x marking vertices (an n-leaf
// tree contributes x^(2n-1)), truncated at x^order.
TruncatedSeries avoid_series(const BinaryTree& t, int order);

// Number of n-leaf trees avoiding t, for n = 1..max_leaves.
std::vector<BigInt> leaf_counts(const BinaryTree& t, int max_leaves);

// Bivariate refinement: x marks vertices, y marks copies of t. Setting y=0
// recovers avoid_series.
TruncatedSeries enumerate_series(const BinaryTree& t, int order);

// Minimal annihilating polynomial of avoid_series, over variables {x, f}.
Poly avoid_equation(const BinaryTree& t, const GenfunOptions& opts = {});

// Annihilating polynomial of enumerate_series, over {x, y, f}.
Poly enumerate_equation(const BinaryTree& t, const GenfunOptions& opts = {});

// Annihilating polynomial of the joint series over {x_L, x_p1..x_pk, f},
// where x_L marks vertices and x_pi marks copies of patterns[i]. A single
// leaf is allowed only as the sole pattern.
Poly multi_equation(const std::vector<BinaryTree>& patterns,
                    const GenfunOptions& opts = {});

// Exhaustive-enumeration oracles, independent of the algebra above.
std::vector<BigInt> brute_force_avoid_counts(const BinaryTree& t, int max_leaves);

// table[n-1][k] = number of n-leaf trees containing exactly k copies of t.
std::vector<std::vector<BigInt>> brute_force_copy_table(const BinaryTree& t,
                                                        int max_leaves);

// The bivariate series assembled from brute_force_copy_table, truncated at
// x^(2*max_leaves - 1).
TruncatedSeries brute_force_enumerate_series(const BinaryTree& t, int max_leaves);

}  // namespace treepat
