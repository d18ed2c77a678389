#include "treepat/tree.hpp"

#include <mutex>

namespace treepat {

namespace {

void append_word(const BinaryTree& t, std::string& out) {
    out += '(';
    if (!t.is_leaf()) {
        append_word(t.left(), out);
        append_word(t.right(), out);
    }
    out += ')';
}

}  // namespace

std::string BinaryTree::word() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(2 * vertex_count()) + 2);
    append_word(*this, out);
    return out;
}

bool BinaryTree::operator==(const BinaryTree& other) const {
    if (node_ == other.node_) return true;
    if (!node_ || !other.node_) return false;
    if (node_->leaves != other.node_->leaves) return false;
    return node_->left == other.node_->left && node_->right == other.node_->right;
}

std::string GeneralTree::word() const {
    std::string out = "(";
    for (const auto& c : children) out += c.word();
    out += ')';
    return out;
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                     text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", text.size());
        return text[pos];
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= text.size())
            throw ParseError(std::string("expected ") + what, text.size());
        if (text[pos] != c)
            throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }
};

BinaryTree parse_binary(Cursor& cur) {
    cur.expect('(', "'('");
    if (cur.peek() == ')') {
        ++cur.pos;
        return BinaryTree::leaf();
    }
    BinaryTree l = parse_binary(cur);
    if (cur.peek() == ')')
        throw ParseError("vertex has exactly one child", cur.pos);
    BinaryTree r = parse_binary(cur);
    cur.expect(')', "')'");
    return BinaryTree(l, r);
}

GeneralTree parse_general(Cursor& cur) {
    cur.expect('(', "'('");
    GeneralTree g;
    while (cur.peek() != ')') g.children.push_back(parse_general(cur));
    ++cur.pos;
    return g;
}

}  // namespace

BinaryTree parse_tree(const std::string& text) {
    Cursor cur{text};
    BinaryTree t = parse_binary(cur);
    if (!cur.at_end()) throw ParseError("trailing input", cur.pos);
    return t;
}

GeneralTree parse_general_tree(const std::string& text) {
    Cursor cur{text};
    GeneralTree g = parse_general(cur);
    if (!cur.at_end()) throw ParseError("trailing input", cur.pos);
    return g;
}

const std::vector<BinaryTree>& all_trees(int leaves) {
    if (leaves < 1) throw DomainError("leaf count must be positive");
    static std::mutex mu;
    static std::vector<std::vector<BinaryTree>> cache;  // cache[n-1] = trees with n leaves
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(cache.size()) >= leaves) return cache[leaves - 1];
    if (cache.empty()) cache.push_back({BinaryTree::leaf()});
    for (int n = static_cast<int>(cache.size()) + 1; n <= leaves; ++n) {
        std::vector<BinaryTree> list;
        for (int k = 1; k <= n - 1; ++k)
            for (const BinaryTree& l : cache[k - 1])
                for (const BinaryTree& r : cache[n - k - 1])
                    list.emplace_back(l, r);
        cache.push_back(std::move(list));
    }
    return cache[leaves - 1];
}

namespace {

// Catalan numbers as int64; C(33) is the last one below 2^63.
constexpr int kMaxCatalanLeaves = 34;

std::int64_t catalan_i64(int n) {
    static const std::vector<std::int64_t> table = [] {
        std::vector<std::int64_t> t(kMaxCatalanLeaves);
        t[0] = 1;
        for (int i = 1; i < kMaxCatalanLeaves; ++i) {
            t[i] = 0;
            for (int j = 0; j < i; ++j) t[i] += t[j] * t[i - 1 - j];
        }
        return t;
    }();
    return table[n];
}

}  // namespace

TreeIndex tree_index(const BinaryTree& t) {
    int n = t.leaf_count();
    if (n > kMaxCatalanLeaves)
        throw DomainError("tree_index supports at most 34 leaves");
    if (t.is_leaf()) return {1, 1};
    int k = t.left().leaf_count();
    std::int64_t offset = 0;
    for (int j = 1; j < k; ++j)
        offset += catalan_i64(j - 1) * catalan_i64(n - j - 1);
    TreeIndex li = tree_index(t.left());
    TreeIndex ri = tree_index(t.right());
    return {n, offset + (li.index - 1) * catalan_i64(n - k - 1) + ri.index};
}

BinaryTree index_to_tree(int leaves, std::int64_t index) {
    if (leaves < 1) throw DomainError("leaf count must be positive");
    if (leaves > kMaxCatalanLeaves)
        throw DomainError("index_to_tree supports at most 34 leaves");
    if (index < 1 || index > catalan_i64(leaves - 1))
        throw DomainError("tree index " + std::to_string(index) +
                          " out of range for " + std::to_string(leaves) + " leaves");
    if (leaves == 1) return BinaryTree::leaf();
    std::int64_t rest = index - 1;
    for (int k = 1; k <= leaves - 1; ++k) {
        std::int64_t block = catalan_i64(k - 1) * catalan_i64(leaves - k - 1);
        if (rest < block) {
            std::int64_t per_left = catalan_i64(leaves - k - 1);
            return BinaryTree(index_to_tree(k, rest / per_left + 1),
                              index_to_tree(leaves - k, rest % per_left + 1));
        }
        rest -= block;
    }
    throw DomainError("unreachable");
}

BinaryTree index_to_tree(const TreeIndex& ti) { return index_to_tree(ti.leaves, ti.index); }

namespace {

void beta_forest(const BinaryTree& t, std::vector<GeneralTree>& out) {
    if (t.is_leaf()) return;
    GeneralTree head;
    beta_forest(t.left(), head.children);
    out.push_back(std::move(head));
    beta_forest(t.right(), out);
}

BinaryTree from_forest(const std::vector<GeneralTree>& forest, std::size_t from) {
    if (from == forest.size()) return BinaryTree::leaf();
    return BinaryTree(from_forest(forest[from].children, 0), from_forest(forest, from + 1));
}

}  // namespace

GeneralTree beta(const BinaryTree& t) {
    GeneralTree g;
    beta_forest(t, g.children);
    return g;
}

BinaryTree beta_inverse(const GeneralTree& g) { return from_forest(g.children, 0); }

BinaryTree reflect(const BinaryTree& t) {
    if (t.is_leaf()) return t;
    return BinaryTree(reflect(t.right()), reflect(t.left()));
}

namespace {

void append_dyck(const GeneralTree& g, std::string& out) {
    for (const auto& c : g.children) {
        out += '0';
        append_dyck(c, out);
        out += '1';
    }
}

}  // namespace

std::string dyck_word(const GeneralTree& g) {
    std::string out;
    out.reserve(static_cast<std::size_t>(2 * (g.vertex_count() - 1)));
    append_dyck(g, out);
    return out;
}

}  // namespace treepat
