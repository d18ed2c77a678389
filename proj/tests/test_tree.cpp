#include <doctest.h>

#include <set>
#include <string>

#include "treepat/golden.hpp"
#include "treepat/tree.hpp"

using namespace treepat;

TEST_SUITE("tree") {

TEST_CASE("word and parse round-trip") {
    const BinaryTree leaf;
    CHECK(leaf.is_leaf());
    CHECK(leaf.word() == "()");
    CHECK(leaf.leaf_count() == 1);
    CHECK(leaf.vertex_count() == 1);

    const BinaryTree cherry(leaf, leaf);
    CHECK(cherry.word() == "(()())");
    CHECK(cherry.leaf_count() == 2);
    CHECK(cherry.vertex_count() == 3);

    for (const char* w : {"()", "(()())", "((()())())", "(()((()())(()())))"}) {
        const BinaryTree t = parse_tree(w);
        CHECK(t.word() == w);
        CHECK(parse_tree(t.word()) == t);
    }
    CHECK(parse_tree(" ( () () ) ") == cherry);
}

TEST_CASE("parse errors carry offsets") {
    CHECK_THROWS_AS(parse_tree(""), ParseError);
    CHECK_THROWS_AS(parse_tree("(()"), ParseError);
    CHECK_THROWS_AS(parse_tree("(()())()"), ParseError);
    CHECK_THROWS_AS(parse_tree("((())())"), ParseError);
    CHECK_THROWS_AS(parse_tree("x"), ParseError);
    try {
        parse_tree("(()())()");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
    }
}

TEST_CASE("children of a leaf are out of domain") {
    CHECK_THROWS_AS(BinaryTree::leaf().left(), DomainError);
    CHECK_THROWS_AS(BinaryTree::leaf().right(), DomainError);
}

TEST_CASE("enumeration counts and order") {
    const auto& cat = golden::catalan_prefix();
    for (int n = 1; n <= 10; ++n)
        CHECK(std::int64_t(all_trees(n).size()) == cat[n - 1]);

    std::set<std::string> words;
    for (const auto& t : all_trees(6)) {
        CHECK(t.leaf_count() == 6);
        words.insert(t.word());
    }
    CHECK(words.size() == all_trees(6).size());

    // Left factor varies slower than the right: the first 5-leaf tree has a
    // one-leaf left child, the last is the left comb.
    CHECK(all_trees(5).front().left().is_leaf());
    CHECK(all_trees(5).back().right().is_leaf());
}

TEST_CASE("index round-trip") {
    for (int n = 1; n <= 9; ++n) {
        std::int64_t i = 1;
        for (const auto& t : all_trees(n)) {
            const TreeIndex ti = tree_index(t);
            CHECK(ti.leaves == n);
            CHECK(ti.index == i);
            CHECK(index_to_tree(ti) == t);
            ++i;
        }
    }
    CHECK(index_to_tree(7, 95).leaf_count() == 7);
    CHECK(tree_index(index_to_tree(7, 95)).index == 95);
    CHECK_THROWS_AS(index_to_tree(4, 0), DomainError);
    CHECK_THROWS_AS(index_to_tree(4, 6), DomainError);
}

TEST_CASE("reflection is an involution") {
    CHECK(reflect(index_to_tree(4, 1)) == index_to_tree(4, 5));
    CHECK(reflect(index_to_tree(4, 3)) == index_to_tree(4, 3));
    for (const auto& t : all_trees(7)) CHECK(reflect(reflect(t)) == t);
}

TEST_CASE("plane-tree bijection") {
    for (int n = 1; n <= 10; ++n) {
        std::set<std::string> images;
        for (const auto& t : all_trees(n)) {
            const GeneralTree g = beta(t);
            CHECK(g.vertex_count() == n);
            CHECK(beta_inverse(g) == t);
            images.insert(g.word());
        }
        CHECK(images.size() == all_trees(n).size());
    }
    const GeneralTree g = parse_general_tree("(()(()()))");
    CHECK(beta(beta_inverse(g)) == g);
}

TEST_CASE("dyck words") {
    for (int n = 2; n <= 9; ++n) {
        std::set<std::string> words;
        for (const auto& t : all_trees(n)) {
            const std::string w = dyck_word(beta(t));
            CHECK(w.size() == std::size_t(2 * (n - 1)));
            int height = 0;
            bool prefix_ok = true;
            for (char c : w) {
                height += c == '0' ? 1 : -1;
                prefix_ok = prefix_ok && height >= 0;
            }
            CHECK(prefix_ok);
            CHECK(height == 0);
            words.insert(w);
        }
        CHECK(words.size() == all_trees(n).size());
    }
    CHECK(dyck_word(GeneralTree{}).empty());
}

}  // TEST_SUITE
