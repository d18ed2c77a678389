#include <doctest.h>

#include <algorithm>
#include <set>

#include "treepat/equivalence.hpp"
#include "treepat/tree.hpp"

using namespace treepat;

TEST_SUITE("equivalence") {

TEST_CASE("small censuses") {
    for (int m = 1; m <= 3; ++m) {
        const Classification c = classify(m);
        CHECK(c.stable);
        CHECK(c.classes.size() == (m == 3 ? 1 : 1));
    }
    const Classification c3 = classify(3);
    CHECK(c3.classes[0].members == std::vector<int>{1, 2});
}

TEST_CASE("four-leaf partition separates combs from the rest") {
    const Classification c = classify(4);
    REQUIRE(c.classes.size() == 2);
    CHECK(c.stable);
    CHECK(c.classes[0].members == std::vector<int>{1, 5});
    CHECK(c.classes[1].members == std::vector<int>{2, 3, 4});
    CHECK(c.classes[0].label() == "4.1");
    CHECK(c.classes[1].label() == "4.2");
    CHECK(c.class_of(3) == 2);

    // Count prefixes: Motzkin numbers vs powers of two.
    CHECK(c.classes[0].counts[5] == 21);
    CHECK(c.classes[1].counts[5] == 16);
}

TEST_CASE("five-leaf partition") {
    const Classification c = classify(5);
    REQUIRE(c.classes.size() == 3);
    CHECK(c.classes[0].members.size() == 2);
    CHECK(c.classes[1].members ==
          std::vector<int>{2, 3, 4, 6, 7, 8, 9, 11, 12, 13});
    CHECK(c.classes[2].members.size() == 2);
}

TEST_CASE("six-leaf partition") {
    const Classification c = classify(6);
    REQUIRE(c.classes.size() == 7);
    const int sizes[] = {2, 8, 14, 8, 6, 2, 2};
    for (int i = 0; i < 7; ++i)
        CHECK(int(c.classes[i].members.size()) == sizes[i]);

    const auto& fifth = c.classes[4].members;
    CHECK(std::count(fifth.begin(), fifth.end(), 7) == 1);
    CHECK(std::count(fifth.begin(), fifth.end(), 11) == 1);
    CHECK(std::count(fifth.begin(), fifth.end(), 17) == 1);

    // Avoider counts are mirror-invariant, so classes close under reflection.
    for (const auto& cls : c.classes) {
        std::set<int> members(cls.members.begin(), cls.members.end());
        for (int i : cls.members) {
            const auto r = tree_index(reflect(index_to_tree(6, i)));
            CHECK(members.count(int(r.index)) == 1);
        }
    }
}

TEST_CASE("seven-leaf trio lands in one class") {
    const Classification c = classify(7);
    CHECK(c.stable);
    CHECK(c.classes.size() == 15);
    const int id = c.class_of(61);
    CHECK(c.class_of(65) == id);
    CHECK(c.class_of(81) == id);
    CHECK(c.classes[id - 1].members.size() == 6);
}

TEST_CASE("pairwise equivalence") {
    CHECK(are_equivalent(index_to_tree(4, 1), index_to_tree(4, 5)));
    CHECK_FALSE(are_equivalent(index_to_tree(4, 1), index_to_tree(4, 2)));
    CHECK(are_equivalent(index_to_tree(3, 1), index_to_tree(3, 2)));
}

TEST_CASE("refined series agree within four-leaf classes") {
    const ConjectureReport r = check_enumerating_conjecture(4, 21);
    CHECK(r.pass());
    CHECK(r.classes_checked == 2);
    CHECK(r.pairs_checked > 0);
}

TEST_CASE("classify validates its arguments") {
    CHECK_THROWS_AS(classify(0), DomainError);
    // Non-positive orders fall back to the leaf-count default.
    CHECK(classify(3, -2).order == classify(3).order);
    CHECK_THROWS_AS(classify(4).class_of(6), DomainError);
}

}  // TEST_SUITE
