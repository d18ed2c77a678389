#pragma once

#include <string>
#include <vector>

#include "treepat/pattern.hpp"
#include "treepat/polynomial.hpp"
#include "treepat/series.hpp"

namespace treepat {

enum class WeightMode { Avoid, Enumerate, Multi };

// Polynomial fixed-point system whose solution assigns each tracked pattern
// the generating function of the trees matching it. The unknown for the
// single blank "L" is the target series f; the other unknowns are auxiliary
// pattern weights discovered while closing the system.
struct WeightSystem {
    WeightMode mode;
    RingPtr ring;
    std::vector<int> unknown_vars;           // ring indices, f first
    std::vector<std::string> unknown_words;  // pattern word per unknown
    std::vector<Poly> rhs;                   // defining right-hand sides
    std::vector<int> param_vars;             // x (and y), or x_L and x_p1..x_pk

    SeriesSystem series_system() const { return {ring, unknown_vars, rhs}; }
    int var_of(const std::string& pattern_word) const;
};

// System for the generating function of trees avoiding t, from the
// recurrence: weight(<p_l p_r>) = x*(w(p_l)w(p_r) - w(p_l^t_l)w(p_r^t_r))
// with seed f = x + w((LL)), where ^ denotes pattern intersection.
// Requires an internal all-blank pattern.
WeightSystem build_avoid_system(const TreePattern& t);

// System counting copies of t with a y-marker:
// weight(<p_l p_r>) = x*(w(p_l)w(p_r) + (y-1)*w(p_l^t_l)w(p_r^t_r)).
WeightSystem build_enumerate_system(const TreePattern& t);

// Joint system counting copies of several patterns at once, over variables
// x_L (vertices) and x_p1..x_pk (one per pattern). Patterns must be
// all-blank (the single blank L is allowed). Each weight is resolved by
// case analysis: a blank is a leaf or a cherry (partition step) until every
// pattern's root occurrence is decided, after which the weight factors
// through the children.
WeightSystem build_multi_system(const std::vector<TreePattern>& patterns);

}  // namespace treepat
