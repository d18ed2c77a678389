#include "treepat/pattern.hpp"

namespace treepat {

const TreePattern& TreePattern::left() const {
    if (!is_internal()) throw DomainError("pattern vertex has no children");
    return node_->left;
}

const TreePattern& TreePattern::right() const {
    if (!is_internal()) throw DomainError("pattern vertex has no children");
    return node_->right;
}

int TreePattern::blank_count() const {
    switch (kind()) {
        case Kind::Blank: return 1;
        case Kind::TerminalLeaf: return 0;
        case Kind::Internal: return left().blank_count() + right().blank_count();
    }
    return 0;
}

namespace {

void append_word(const TreePattern& p, std::string& out) {
    switch (p.kind()) {
        case TreePattern::Kind::Blank: out += 'L'; return;
        case TreePattern::Kind::TerminalLeaf: out += "()"; return;
        case TreePattern::Kind::Internal:
            out += '(';
            append_word(p.left(), out);
            append_word(p.right(), out);
            out += ')';
            return;
    }
}

}  // namespace

std::string TreePattern::word() const {
    std::string out;
    append_word(*this, out);
    return out;
}

bool TreePattern::operator==(const TreePattern& other) const {
    if (node_ == other.node_) return true;
    Kind k = kind();
    if (k != other.kind()) return false;
    if (k != Kind::Internal) return true;
    return left() == other.left() && right() == other.right();
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
};

TreePattern parse_impl(Cursor& cur) {
    char c = cur.peek();
    if (c == 'L') {
        ++cur.pos;
        return TreePattern::blank();
    }
    if (c != '(') throw ParseError("expected 'L' or '('", cur.pos);
    ++cur.pos;
    if (cur.peek() == ')') {
        ++cur.pos;
        return TreePattern::terminal_leaf();
    }
    TreePattern l = parse_impl(cur);
    if (cur.peek() == ')')
        throw ParseError("pattern vertex has exactly one child", cur.pos);
    TreePattern r = parse_impl(cur);
    if (cur.peek() != ')') throw ParseError("expected ')'", cur.pos);
    ++cur.pos;
    return TreePattern::internal(l, r);
}

}  // namespace

TreePattern parse_pattern(const std::string& text) {
    Cursor cur{text};
    TreePattern p = parse_impl(cur);
    if (!cur.at_end()) throw ParseError("trailing input", cur.pos);
    return p;
}

TreePattern pattern_of(const BinaryTree& t) {
    if (t.is_leaf()) return TreePattern::blank();
    return TreePattern::internal(pattern_of(t.left()), pattern_of(t.right()));
}

BinaryTree pattern_to_tree(const TreePattern& p) {
    switch (p.kind()) {
        case TreePattern::Kind::Blank:
            throw DomainError("pattern with blanks has no tree form");
        case TreePattern::Kind::TerminalLeaf: return BinaryTree::leaf();
        case TreePattern::Kind::Internal:
            return BinaryTree(pattern_to_tree(p.left()), pattern_to_tree(p.right()));
    }
    throw DomainError("unreachable");
}

BinaryTree pattern_shape(const TreePattern& p) {
    if (!p.is_internal()) return BinaryTree::leaf();
    return BinaryTree(pattern_shape(p.left()), pattern_shape(p.right()));
}

bool matches(const BinaryTree& t, const TreePattern& p) {
    switch (p.kind()) {
        case TreePattern::Kind::Blank: return true;
        case TreePattern::Kind::TerminalLeaf: return t.is_leaf();
        case TreePattern::Kind::Internal:
            return !t.is_leaf() && matches(t.left(), p.left()) &&
                   matches(t.right(), p.right());
    }
    return false;
}

namespace {

std::int64_t count_impl(const BinaryTree& t, const TreePattern& p,
                        std::unordered_map<const void*, std::int64_t>* memo) {
    if (t.leaf_count() < p.leaf_count()) return 0;
    const void* key = nullptr;
    if (memo && !t.is_leaf()) {
        key = t.node_id();
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
    }
    std::int64_t total = matches(t, p) ? 1 : 0;
    if (!t.is_leaf())
        total += count_impl(t.left(), p, memo) + count_impl(t.right(), p, memo);
    if (key) memo->emplace(key, total);
    return total;
}

}  // namespace

std::int64_t count_copies(const BinaryTree& t, const TreePattern& p) {
    return count_impl(t, p, nullptr);
}

std::int64_t count_copies(const BinaryTree& t, const TreePattern& p,
                          std::unordered_map<const void*, std::int64_t>& memo) {
    return count_impl(t, p, &memo);
}

bool avoids(const BinaryTree& t, const TreePattern& p) {
    if (t.leaf_count() < p.leaf_count()) return true;
    if (matches(t, p)) return false;
    if (t.is_leaf()) return true;
    return avoids(t.left(), p) && avoids(t.right(), p);
}

std::optional<TreePattern> intersect(const TreePattern& p, const TreePattern& q) {
    if (p.is_blank()) return q;
    if (q.is_blank()) return p;
    if (p.is_terminal_leaf() && q.is_terminal_leaf()) return p;
    if (p.is_internal() && q.is_internal()) {
        auto l = intersect(p.left(), q.left());
        if (!l) return std::nullopt;
        auto r = intersect(p.right(), q.right());
        if (!r) return std::nullopt;
        return TreePattern::internal(*l, *r);
    }
    return std::nullopt;
}

int depth(const TreePattern& p) {
    if (!p.is_internal()) return 0;
    return 1 + std::max(depth(p.left()), depth(p.right()));
}

namespace {

void collect_blanks(const TreePattern& p, std::string& path,
                    std::vector<std::string>& out) {
    switch (p.kind()) {
        case TreePattern::Kind::Blank: out.push_back(path); return;
        case TreePattern::Kind::TerminalLeaf: return;
        case TreePattern::Kind::Internal:
            path += 'l';
            collect_blanks(p.left(), path, out);
            path.back() = 'r';
            collect_blanks(p.right(), path, out);
            path.pop_back();
            return;
    }
}

bool capture_impl(const BinaryTree& t, const TreePattern& p,
                  std::vector<BinaryTree>& out) {
    switch (p.kind()) {
        case TreePattern::Kind::Blank: out.push_back(t); return true;
        case TreePattern::Kind::TerminalLeaf: return t.is_leaf();
        case TreePattern::Kind::Internal:
            return !t.is_leaf() && capture_impl(t.left(), p.left(), out) &&
                   capture_impl(t.right(), p.right(), out);
    }
    return false;
}

BinaryTree substitute_impl(const TreePattern& p, const std::vector<BinaryTree>& fill,
                           std::size_t& next) {
    switch (p.kind()) {
        case TreePattern::Kind::Blank:
            if (next >= fill.size()) throw DomainError("too few subtrees to substitute");
            return fill[next++];
        case TreePattern::Kind::TerminalLeaf: return BinaryTree::leaf();
        case TreePattern::Kind::Internal: {
            BinaryTree l = substitute_impl(p.left(), fill, next);
            BinaryTree r = substitute_impl(p.right(), fill, next);
            return BinaryTree(l, r);
        }
    }
    throw DomainError("unreachable");
}

}  // namespace

std::vector<std::string> blank_paths(const TreePattern& p) {
    std::vector<std::string> out;
    std::string path;
    collect_blanks(p, path, out);
    return out;
}

std::optional<std::vector<BinaryTree>> match_capture(const BinaryTree& t,
                                                     const TreePattern& p) {
    std::vector<BinaryTree> out;
    if (!capture_impl(t, p, out)) return std::nullopt;
    return out;
}

BinaryTree substitute(const TreePattern& p, const std::vector<BinaryTree>& fill) {
    std::size_t next = 0;
    BinaryTree t = substitute_impl(p, fill, next);
    if (next != fill.size()) throw DomainError("too many subtrees to substitute");
    return t;
}

}  // namespace treepat
