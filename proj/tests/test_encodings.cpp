#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "treepat/dyck.hpp"
#include "treepat/encodings.hpp"
#include "treepat/golden.hpp"
#include "treepat/numbers.hpp"
#include "treepat/pattern.hpp"
#include "treepat/tree.hpp"

using namespace treepat;

TEST_SUITE("encodings") {

TEST_CASE("motzkin words") {
    CHECK(is_motzkin_word({}));
    CHECK(is_motzkin_word({1, 0, -1}));
    CHECK(is_motzkin_word({0, 1, -1, 0}));
    CHECK_FALSE(is_motzkin_word({-1, 1}));
    CHECK_FALSE(is_motzkin_word({1, 0}));
    CHECK_FALSE(is_motzkin_word({2}));
}

TEST_CASE("motzkin encoding round-trip") {
    const TreePattern comb = pattern_of(index_to_tree(4, 1));
    const auto& motzkin = golden::motzkin_prefix();
    for (int n = 1; n <= 9; ++n) {
        std::set<std::vector<int>> images;
        for (const auto& t : all_trees(n)) {
            if (!avoids(t, comb)) continue;
            const auto w = motzkin_encode(t);
            CHECK(is_motzkin_word(w));
            CHECK(int(w.size()) == n - 1);
            CHECK(motzkin_decode(w) == t);
            images.insert(w);
        }
        CHECK(std::int64_t(images.size()) == motzkin[n - 1]);
    }
    CHECK(motzkin_encode(BinaryTree::leaf()).empty());
    CHECK(motzkin_decode({}) == BinaryTree::leaf());
}

TEST_CASE("binary-word encodings round-trip") {
    const TreePattern omega_pat = pattern_of(index_to_tree(4, 2));
    const TreePattern spine_pat = pattern_of(index_to_tree(4, 3));
    for (int n = 2; n <= 9; ++n) {
        std::set<std::string> omega_images, spine_images;
        for (const auto& t : all_trees(n)) {
            if (avoids(t, omega_pat)) {
                const std::string w = omega_encode(t);
                CHECK(int(w.size()) == n - 2);
                CHECK(omega_decode(w) == t);
                omega_images.insert(w);
            }
            if (avoids(t, spine_pat)) {
                const std::string w = spine_encode(t);
                CHECK(int(w.size()) == n - 2);
                CHECK(spine_decode(w) == t);
                spine_images.insert(w);
            }
        }
        CHECK(omega_images.size() == std::size_t(1) << (n - 2));
        CHECK(spine_images.size() == std::size_t(1) << (n - 2));
    }
}

TEST_CASE("spine words read the internal path") {
    // The left comb's internal vertices always step left.
    CHECK(spine_encode(index_to_tree(5, 14)) == "000");
    CHECK(spine_encode(index_to_tree(5, 1)) == "111");
    CHECK(spine_decode("01") == parse_tree("((()(()()))())"));
}

TEST_CASE("encoders reject trees containing the pattern") {
    CHECK_THROWS_AS(motzkin_encode(index_to_tree(4, 1)), DomainError);
    CHECK_THROWS_AS(omega_encode(index_to_tree(4, 2)), DomainError);
    CHECK_THROWS_AS(spine_encode(index_to_tree(4, 3)), DomainError);
    CHECK_THROWS_AS(omega_encode(BinaryTree::leaf()), DomainError);
    CHECK_THROWS_AS(omega_decode("012"), DomainError);
    CHECK_THROWS_AS(motzkin_decode({1, 1}), DomainError);
}

TEST_CASE("dyck avoider counting") {
    CHECK(count_dyck_avoiders("000", 4) == 9);
    CHECK(count_dyck_avoiders("100", 4) == 8);
    // A subword longer than the whole word constrains nothing.
    for (int k = 1; k <= 6; ++k)
        CHECK(count_dyck_avoiders("00000000000000", k) == catalan(k));
    CHECK_THROWS_AS(count_dyck_avoiders("012", 4), DomainError);
    CHECK_THROWS_AS(count_dyck_avoiders("000", 13), ResourceError);
}

TEST_CASE("characterization reports") {
    const DyckReport good = check_dyck_characterization(
        pattern_of(index_to_tree(4, 5)), "000", 8);
    CHECK(good.pass);
    CHECK(good.failure.empty());

    const DyckReport bad = check_dyck_characterization(
        pattern_of(index_to_tree(4, 3)), "001", 8);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.failure.empty());
    CHECK(bad.counterexample.has_value());
}

}  // TEST_SUITE
