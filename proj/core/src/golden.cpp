#include "treepat/golden.hpp"

namespace treepat::golden {

const std::vector<ClassEquation>& class_equations() {
    static const std::vector<ClassEquation> table = {
        {1, 1, 1, "x*y*f^2 - f + x*y"},
        {2, 1, 1, "x*y*f^2 - f + x"},
        {3, 1, 2, "x*y*f^2 + (-(x^2)*(y-1) - 1)*f + x"},
        {4, 1, 2, "(x*y - x^3*(y-1))*f^2 + (-(x^2)*(y-1) - 1)*f + x"},
        {4, 2, 3, "x*y*f^2 + (-2*x^2*(y-1) - 1)*f + (x^3*(y-1) + x)"},
        {5, 1, 2,
         "-(x^4)*(y-1)*f^3 + (x*y - x^3*(y-1))*f^2 + (-(x^2)*(y-1) - 1)*f + x"},
        {5, 2, 10,
         "(x*y - x^3*(y-1))*f^2 + (x^2*(x^2-2)*(y-1) - 1)*f + (x^3*(y-1) + x)"},
        {5, 3, 2,
         "x*y*f^3 + (-3*x^2*(y-1) - 1)*f^2 + (3*x^3*(y-1) + x)*f - x^4*(y-1)"},
        {6, 1, 2,
         "-(x^5)*(y-1)*f^4 - x^4*(y-1)*f^3 + (x*y - x^3*(y-1))*f^2"
         " + (-(x^2)*(y-1) - 1)*f + x"},
        {6, 2, 8,
         "-(x^4)*(y-1)*f^3 + x*(x^2*(x^2-1)*(y-1) + y)*f^2"
         " + (x^2*(x^2-2)*(y-1) - 1)*f + (x^3*(y-1) + x)"},
        {6, 3, 14,
         "x*(x^2*(x^2-2)*(y-1) + y)*f^2 + (2*x^2*(x^2-1)*(y-1) - 1)*f"
         " + (x^3*(y-1) + x)"},
        {6, 4, 8,
         "(x*y - x^3*(y-1))*f^3 + (x^2*(2*x^2-3)*(y-1) - 1)*f^2"
         " + (-(x^5)*(y-1) + 3*x^3*(y-1) + x)*f - x^4*(y-1)"},
        {6, 5, 6,
         "(x*y - 2*x^3*(y-1))*f^2 + (x^2*(3*x^2-2)*(y-1) - 1)*f"
         " + (-(x^5)*(y-1) + x^3*(y-1) + x)"},
        {6, 6, 2,
         "-x*y*f^4 + (4*x^2*(y-1) + 1)*f^3 + (-6*x^3*(y-1) - x)*f^2"
         " + 4*x^4*(y-1)*f - x^5*(y-1)"},
        {6, 7, 2,
         "x^4*(x^2*(y-1) - y)*(y-1)*f^3"
         " + (-2*x^7*(y-1)^2 + x^5*(y-1)*(3*y-2) - x^3*(y-1) + x*y)*f^2"
         " + (x^2*(x^6*(y-1) - 3*x^4*(y-1) + x^2 - 2)*(y-1) - 1)*f"
         " + (x^7*(y-1)^2 + x^3*(y-1) + x)"},
    };
    return table;
}

const std::vector<int>& class_counts() {
    static const std::vector<int> counts = {1, 1, 1, 2, 3, 7, 15, 44};
    return counts;
}

const std::vector<RuleEntry>& five_leaf_two_rules() {
    static const std::vector<RuleEntry> table = {
        {5, 2, 3, "14235"},  {5, 2, 6, "43125"},  {5, 3, 4, "12534"},
        {5, 3, 6, "31245"},  {5, 3, 12, "51234"}, {5, 4, 3, "12453"},
        {5, 4, 8, "41235"},  {5, 6, 7, "12534"},  {5, 6, 8, "45123"},
        {5, 7, 6, "12453"},  {5, 7, 9, "45123"},  {5, 8, 6, "34512"},
        {5, 8, 9, "31245"},  {5, 9, 7, "34512"},  {5, 9, 8, "23145"},
        {5, 11, 7, "13452"}, {5, 11, 12, "31245"}, {5, 12, 3, "23451"},
        {5, 12, 9, "12453"}, {5, 12, 11, "23145"}, {5, 13, 9, "14532"},
        {5, 13, 12, "13425"},
    };
    return table;
}

const std::vector<std::int64_t>& seven_leaf_trio() {
    static const std::vector<std::int64_t> trio = {61, 65, 81};
    return trio;
}

const RuleEntry& seven_leaf_two_rule() {
    static const RuleEntry entry = {7, 81, 61, "1456723"};
    return entry;
}

const std::vector<RuleEntry>& seven_leaf_one_rules() {
    static const std::vector<RuleEntry> table = {
        {7, 61, 65, "4561237"},
        {7, 61, 65, "4571236"},
        {7, 65, 81, "2341675"},
    };
    return table;
}

const RuleEntry& six_leaf_two_rule() {
    static const RuleEntry entry = {6, 7, 11, "126345"};
    return entry;
}

const InducedBijection& six_leaf_induced_bijection() {
    static const InducedBijection entry = {{4, 2, 3, "3124"}, 6, 7, 17};
    return entry;
}

const std::vector<DyckEntry>& dyck_entries() {
    static const std::vector<DyckEntry> table = {
        {4, 5, "000", true},    {4, 2, "100", true},
        {5, 7, "1100", true},   {5, 5, "1000", true},
        {6, 19, "11000", true}, {6, 14, "10000", true},
        {4, 3, "001", false},
    };
    return table;
}

const char* sample_pattern() { return "(L(L((LL)L)))"; }

const char* sample_avoid_equation() {
    return "x^3*f^2 - (x^2-1)^2*f - x*(x^2-1)";
}

const ReplacementChain& sample_replacement_chain() {
    static const ReplacementChain entry = {
        {4, 2, 3, "3124"}, 9, {1243, 1085, 1037, 1033}};
    return entry;
}

const std::vector<std::int64_t>& catalan_prefix() {
    static const std::vector<std::int64_t> seq = {1,   1,   2,    5,    14,
                                                  42,  132, 429,  1430, 4862,
                                                  16796, 58786};
    return seq;
}

const std::vector<std::int64_t>& motzkin_prefix() {
    static const std::vector<std::int64_t> seq = {1,  1,  2,   4,   9,   21,
                                                  51, 127, 323, 835, 2188, 5798};
    return seq;
}

}  // namespace treepat::golden
