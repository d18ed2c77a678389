#include "treepat/encodings.hpp"

#include <memory>

#include "treepat/errors.hpp"

namespace treepat {

bool is_motzkin_word(const std::vector<int>& word) {
    int height = 0;
    for (int step : word) {
        if (step < -1 || step > 1) return false;
        height += step;
        if (height < 0) return false;
    }
    return height == 0;
}

namespace {

void motzkin_steps(const GeneralTree& g, std::vector<int>& out) {
    if (g.children.size() > 2)
        throw DomainError("tree contains the four-leaf right comb");
    out.push_back(static_cast<int>(g.children.size()) - 1);
    for (const auto& child : g.children) motzkin_steps(child, out);
}

GeneralTree from_motzkin_steps(const std::vector<int>& steps,
                               std::size_t& pos) {
    GeneralTree g;
    const int children = steps[pos++] + 1;
    g.children.reserve(static_cast<std::size_t>(children));
    for (int i = 0; i < children; ++i)
        g.children.push_back(from_motzkin_steps(steps, pos));
    return g;
}

}  // namespace

std::vector<int> motzkin_encode(const BinaryTree& t) {
    std::vector<int> word;
    motzkin_steps(beta(t), word);
    word.pop_back();  // the depth-first walk always ends at a childless vertex
    return word;
}

BinaryTree motzkin_decode(const std::vector<int>& word) {
    if (!is_motzkin_word(word)) throw DomainError("not a Motzkin word");
    std::vector<int> steps = word;
    steps.push_back(-1);
    std::size_t pos = 0;
    GeneralTree g = from_motzkin_steps(steps, pos);
    return beta_inverse(g);
}

namespace {

std::string omega(const BinaryTree& t) {
    std::string out;
    if (!t.right().is_leaf()) {
        out += '1';
        out += omega(t.right());
    }
    if (!t.left().is_leaf()) {
        out += '0';
        out += omega(t.left());
    }
    return out;
}

bool contains_omega_obstruction(const BinaryTree& t) {
    if (t.is_leaf()) return false;
    if (!t.right().is_leaf() && !t.right().left().is_leaf()) return true;
    return contains_omega_obstruction(t.left()) ||
           contains_omega_obstruction(t.right());
}

struct MutableNode {
    std::unique_ptr<MutableNode> left, right;

    bool is_leaf() const { return !left; }
    BinaryTree freeze() const {
        if (is_leaf()) return BinaryTree::leaf();
        return BinaryTree(left->freeze(), right->freeze());
    }
};

}  // namespace

std::string omega_encode(const BinaryTree& t) {
    if (t.is_leaf())
        throw DomainError("the single-leaf tree has no such encoding");
    if (contains_omega_obstruction(t))
        throw DomainError("tree contains (L((LL)L))");
    return omega(t);
}

BinaryTree omega_decode(const std::string& word) {
    // Grow a tree around two movable marks l (in the left arm) and r (in the
    // right arm): '1' pushes r one step down-right behind a new leaf; '0'
    // retires r and reopens both marks as the children of l. Marks left
    // untouched at the end become leaves.
    MutableNode root;
    root.left = std::make_unique<MutableNode>();
    root.right = std::make_unique<MutableNode>();
    MutableNode* l = root.left.get();
    MutableNode* r = root.right.get();
    for (char c : word) {
        if (c == '1') {
            r->left = std::make_unique<MutableNode>();
            r->right = std::make_unique<MutableNode>();
            r = r->right.get();
        } else if (c == '0') {
            l->left = std::make_unique<MutableNode>();
            l->right = std::make_unique<MutableNode>();
            r = l->right.get();
            l = l->left.get();
        } else {
            throw DomainError("word must be over {0,1}");
        }
    }
    return root.freeze();
}

std::string spine_encode(const BinaryTree& t) {
    if (t.is_leaf())
        throw DomainError("the single-leaf tree has no such encoding");
    std::string out;
    const BinaryTree* current = &t;
    while (true) {
        const bool left_internal = !current->left().is_leaf();
        const bool right_internal = !current->right().is_leaf();
        if (left_internal && right_internal)
            throw DomainError("tree contains ((LL)(LL))");
        if (!left_internal && !right_internal) return out;
        out += left_internal ? '0' : '1';
        current = left_internal ? &current->left() : &current->right();
    }
}

BinaryTree spine_decode(const std::string& word) {
    BinaryTree current(BinaryTree::leaf(), BinaryTree::leaf());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == '0')
            current = BinaryTree(current, BinaryTree::leaf());
        else if (*it == '1')
            current = BinaryTree(BinaryTree::leaf(), current);
        else
            throw DomainError("word must be over {0,1}");
    }
    return current;
}

}  // namespace treepat
