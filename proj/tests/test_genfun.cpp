#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>

#include "treepat/genfun.hpp"
#include "treepat/golden.hpp"
#include "treepat/pattern.hpp"
#include "treepat/polynomial.hpp"
#include "treepat/series.hpp"
#include "treepat/tree.hpp"

using namespace treepat;

TEST_SUITE("genfun") {

TEST_CASE("avoiding series against brute force") {
    for (std::int64_t i = 1; i <= 5; ++i) {
        const BinaryTree t = index_to_tree(4, i);
        CHECK(leaf_counts(t, 10) == brute_force_avoid_counts(t, 10));
    }
    const BinaryTree t = index_to_tree(5, 7);
    CHECK(leaf_counts(t, 10) == brute_force_avoid_counts(t, 10));
}

TEST_CASE("named count sequences") {
    const auto& motzkin = golden::motzkin_prefix();
    const auto combs = leaf_counts(index_to_tree(4, 1), 10);
    for (int n = 1; n <= 10; ++n) CHECK(combs[n - 1] == motzkin[n - 1]);

    const auto powers = leaf_counts(index_to_tree(4, 2), 10);
    for (int n = 3; n <= 10; ++n) CHECK(powers[n - 1] == BigInt(1) << (n - 2));

    const auto catalan_all = leaf_counts(index_to_tree(2, 1), 1);
    CHECK(catalan_all == std::vector<BigInt>{1});
}

TEST_CASE("series specializations") {
    const BinaryTree t = index_to_tree(4, 2);
    const TruncatedSeries en = enumerate_series(t, 17);

    // y = 0 keeps only copy-free trees.
    const TruncatedSeries av = avoid_series(t, 17);
    for (int e = 1; e <= 17; e += 2)
        CHECK(en.coefficient(e, 0) == av.coefficient(e, 0));

    // y = 1 forgets the copy statistic.
    const TruncatedSeries all = en.at_y_one();
    for (int n = 1; n <= 9; ++n)
        CHECK(all.coefficient(2 * n - 1, 0) == Rational(catalan(n - 1)));

    CHECK(en == brute_force_enumerate_series(t, 9));
}

TEST_CASE("worked avoidance equation") {
    auto ring = make_ring({"x", "f"});
    const BinaryTree t = pattern_shape(parse_pattern(golden::sample_pattern()));
    const Poly got = avoid_equation(t).mapped_to(ring).normalized();
    CHECK(got == parse_poly(ring, golden::sample_avoid_equation()).normalized());
    CHECK(verify_annihilates(got,
                             {{"x", TruncatedSeries::x(31)},
                              {"f", avoid_series(t, 31)}},
                             31));
}

TEST_CASE("enumerating equations for the four-leaf classes") {
    auto ring = make_ring({"x", "y", "f"});
    std::map<int, std::string> stored;
    for (const auto& ce : golden::class_equations())
        if (ce.leaves == 4) stored[ce.id] = ce.equation;
    REQUIRE(stored.size() == 2);

    const Poly comb = enumerate_equation(index_to_tree(4, 1)).mapped_to(ring);
    CHECK(comb.normalized() == parse_poly(ring, stored[1]).normalized());
    const Poly mid = enumerate_equation(index_to_tree(4, 2)).mapped_to(ring);
    CHECK(mid.normalized() == parse_poly(ring, stored[2]).normalized());
}

TEST_CASE("joint equation with one tracked pattern") {
    // Map both results onto default-order rings with the same variable
    // layout (vertex mark, copy mark, series) so positions correspond.
    auto joint_ring = make_ring({"x_L", "x_p1", "f"});
    auto single_ring = make_ring({"x", "y", "f"});
    for (std::int64_t i = 1; i <= 5; ++i) {
        const BinaryTree t = index_to_tree(4, i);
        const Poly joint = multi_equation({t}).mapped_to(joint_ring).normalized();
        const Poly single = enumerate_equation(t).mapped_to(single_ring).normalized();

        REQUIRE(joint.terms().size() == single.terms().size());
        for (std::size_t k = 0; k < joint.terms().size(); ++k) {
            CHECK(joint.terms()[k].exp == single.terms()[k].exp);
            CHECK(joint.terms()[k].coef == single.terms()[k].coef);
        }

        CHECK(verify_annihilates(joint,
                                 {{"x_L", TruncatedSeries::x(31)},
                                  {"x_p1", TruncatedSeries::y(31)},
                                  {"f", enumerate_series(t, 31)}},
                                 31));
    }
}

TEST_CASE("joint equation for a pair of patterns") {
    const std::vector<BinaryTree> pair = {index_to_tree(3, 1),
                                          index_to_tree(3, 2)};
    const Poly joint = multi_equation(pair);
    CHECK_FALSE(joint.is_zero());
    const auto& vars = joint.ring()->vars;
    CHECK(std::count(vars.begin(), vars.end(), "x_p2") == 1);
}

TEST_CASE("single leaf pattern") {
    CHECK(avoid_series(BinaryTree::leaf(), 9).is_zero());
    const TruncatedSeries en = enumerate_series(BinaryTree::leaf(), 9);
    // Every vertex is a copy, so x and y powers move together.
    for (int n = 1; n <= 5; ++n)
        CHECK(en.coefficient(2 * n - 1, 2 * n - 1) == Rational(catalan(n - 1)));
    CHECK(en.coefficient(3, 0) == 0);
}

TEST_CASE("copy tables") {
    const BinaryTree t = index_to_tree(4, 1);
    const auto table = brute_force_copy_table(t, 6);
    REQUIRE(table.size() == 6);
    BigInt row_sum = 0;
    for (const auto& v : table[5]) row_sum += v;
    CHECK(row_sum == catalan(5));
    CHECK(table[5][0] == 21);  // six-leaf comb avoiders (Motzkin)
}

TEST_CASE("budget exhaustion raises a resource error") {
    GenfunOptions opts;
    opts.order = 31;
    opts.cas_budget = std::chrono::milliseconds(1);
    CHECK_THROWS_AS(enumerate_equation(index_to_tree(7, 61), opts),
                    ResourceError);
}

}  // TEST_SUITE
