#include "treepat/weights.hpp"

#include <deque>
#include <functional>
#include <map>

#include "treepat/errors.hpp"

namespace treepat {

int WeightSystem::var_of(const std::string& pattern_word) const {
    for (std::size_t i = 0; i < unknown_words.size(); ++i)
        if (unknown_words[i] == pattern_word) return unknown_vars[i];
    return -1;
}

namespace {

constexpr std::size_t kMaxUnknowns = 2000;

bool all_blank(const TreePattern& p) {
    switch (p.kind()) {
        case TreePattern::Kind::Blank: return true;
        case TreePattern::Kind::TerminalLeaf: return false;
        case TreePattern::Kind::Internal:
            return all_blank(p.left()) && all_blank(p.right());
    }
    return false;
}

void require_internal_blank_pattern(const TreePattern& t) {
    if (!t.is_internal() || !all_blank(t))
        throw DomainError("pattern must be an internal all-blank tree pattern");
}

// Single-pattern systems. Auxiliary unknowns are the intersections of
// subpatterns with the target's arms; discovery is breadth-first from the
// cherry (LL), so variable numbering is deterministic.
WeightSystem build_single(const TreePattern& t, bool enumerate) {
    require_internal_blank_pattern(t);

    std::map<std::string, int> unknown_ids;  // word -> unknown position
    std::vector<TreePattern> patterns;       // per unknown, L first
    std::deque<int> queue;

    auto id_of = [&](const TreePattern& p) {
        std::string w = p.word();
        auto it = unknown_ids.find(w);
        if (it != unknown_ids.end()) return it->second;
        int id = static_cast<int>(patterns.size());
        if (patterns.size() >= kMaxUnknowns)
            throw ResourceError("weight system grew beyond the unknown cap");
        unknown_ids.emplace(std::move(w), id);
        patterns.push_back(p);
        queue.push_back(id);
        return id;
    };

    id_of(TreePattern::blank());  // f
    (void)id_of(TreePattern::internal(TreePattern::blank(), TreePattern::blank()));
    queue.pop_front();  // the blank's equation is the fixed seed

    struct Refs {
        int left, right, left_cut, right_cut;
    };
    std::vector<Refs> refs(1, Refs{-1, -1, -1, -1});  // placeholder for f

    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        TreePattern q = patterns[static_cast<std::size_t>(id)];
        auto lcut = intersect(q.left(), t.left());
        auto rcut = intersect(q.right(), t.right());
        if (!lcut || !rcut)
            throw DomainError("unexpected empty intersection in weight system");
        Refs r{id_of(q.left()), id_of(q.right()), id_of(*lcut), id_of(*rcut)};
        refs.resize(patterns.size(), Refs{-1, -1, -1, -1});
        refs[static_cast<std::size_t>(id)] = r;
    }
    refs.resize(patterns.size(), Refs{-1, -1, -1, -1});

    std::vector<std::string> vars = {"x"};
    if (enumerate) vars.push_back("y");
    vars.push_back("f");
    for (std::size_t i = 1; i < patterns.size(); ++i)
        vars.push_back("w" + std::to_string(i));
    RingPtr ring = make_ring(vars);

    WeightSystem sys;
    sys.mode = enumerate ? WeightMode::Enumerate : WeightMode::Avoid;
    sys.ring = ring;
    int x = ring->index_of("x");
    int y = enumerate ? ring->index_of("y") : -1;
    sys.param_vars.push_back(x);
    if (enumerate) sys.param_vars.push_back(y);
    int base = enumerate ? 2 : 1;  // unknown i lives at ring index base + i
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        sys.unknown_vars.push_back(base + static_cast<int>(i));
        sys.unknown_words.push_back(patterns[i].word());
    }

    Poly X = Poly::variable(ring, x);
    auto V = [&](int id) { return Poly::variable(ring, sys.unknown_vars[static_cast<std::size_t>(id)]); };

    sys.rhs.push_back(X + V(1));  // f = x + w((LL))
    for (std::size_t i = 1; i < patterns.size(); ++i) {
        const Refs& r = refs[i];
        Poly grow = V(r.left) * V(r.right);
        Poly cut = V(r.left_cut) * V(r.right_cut);
        if (enumerate) {
            Poly Y = Poly::variable(ring, y);
            sys.rhs.push_back(X * (grow + (Y - Poly::constant(ring, 1)) * cut));
        } else {
            sys.rhs.push_back(X * (grow - cut));
        }
    }
    return sys;
}

}  // namespace

WeightSystem build_avoid_system(const TreePattern& t) { return build_single(t, false); }

WeightSystem build_enumerate_system(const TreePattern& t) { return build_single(t, true); }

WeightSystem build_multi_system(const std::vector<TreePattern>& patterns) {
    if (patterns.empty()) throw DomainError("need at least one pattern");
    for (const auto& p : patterns)
        if (!all_blank(p))
            throw DomainError("patterns must be all-blank tree patterns");
    const int k = static_cast<int>(patterns.size());

    // Discover the unknowns first: a pattern needs an unknown when some
    // tracked pattern's occurrence at its root is undecided (and it is not
    // yet a tree). Undecided blanks are split into leaf/cherry cases.
    std::map<std::string, int> unknown_ids;
    std::vector<TreePattern> unknown_patterns;
    std::deque<int> queue;

    auto root_decided = [&](const TreePattern& p) {
        for (const auto& pi : patterns) {
            auto cap = intersect(p, pi);
            if (cap && !(*cap == p)) return false;
        }
        return true;
    };

    auto id_of = [&](const TreePattern& p) {
        std::string w = p.word();
        auto it = unknown_ids.find(w);
        if (it != unknown_ids.end()) return it->second;
        int id = static_cast<int>(unknown_patterns.size());
        if (unknown_patterns.size() >= kMaxUnknowns)
            throw ResourceError("weight system grew beyond the unknown cap");
        unknown_ids.emplace(std::move(w), id);
        unknown_patterns.push_back(p);
        queue.push_back(id);
        return id;
    };

    // Expansion of a weight to references: tree -> monomial data;
    // decided internal -> product over children; undecided -> unknown.
    struct Expansion {
        // Sum of products: each product is a list of unknown ids plus a
        // monomial (x_L exponent, per-pattern exponents).
        struct Product {
            std::vector<int> factors;
            int xl = 0;
            std::vector<int> xp;
        };
        std::vector<Product> products;
    };

    std::function<void(const TreePattern&, Expansion::Product&, Expansion&)> expand_into;
    auto expand = [&](const TreePattern& p) {
        Expansion e;
        Expansion::Product unit;
        unit.xp.assign(static_cast<std::size_t>(k), 0);
        expand_into(p, unit, e);
        return e;
    };
    expand_into = [&](const TreePattern& p, Expansion::Product& acc, Expansion& out) {
        if (p.blank_count() == 0) {
            BinaryTree tr = pattern_to_tree(p);
            Expansion::Product prod = acc;
            prod.xl += tr.vertex_count();
            for (int i = 0; i < k; ++i)
                prod.xp[static_cast<std::size_t>(i)] +=
                    static_cast<int>(count_copies(tr, patterns[static_cast<std::size_t>(i)]));
            out.products.push_back(std::move(prod));
            return;
        }
        if (p.is_internal() && root_decided(p)) {
            Expansion::Product prod = acc;
            prod.xl += 1;
            for (int i = 0; i < k; ++i) {
                auto cap = intersect(p, patterns[static_cast<std::size_t>(i)]);
                if (cap && *cap == p) prod.xp[static_cast<std::size_t>(i)] += 1;
            }
            // Weight factors through the children.
            Expansion left = expand(p.left());
            Expansion right = expand(p.right());
            for (const auto& a : left.products)
                for (const auto& b : right.products) {
                    Expansion::Product q = prod;
                    q.xl += a.xl + b.xl;
                    for (int i = 0; i < k; ++i)
                        q.xp[static_cast<std::size_t>(i)] +=
                            a.xp[static_cast<std::size_t>(i)] + b.xp[static_cast<std::size_t>(i)];
                    q.factors.insert(q.factors.end(), a.factors.begin(), a.factors.end());
                    q.factors.insert(q.factors.end(), b.factors.begin(), b.factors.end());
                    out.products.push_back(std::move(q));
                }
            return;
        }
        Expansion::Product prod = acc;
        prod.factors.push_back(id_of(p));
        out.products.push_back(std::move(prod));
    };

    // Partition step: substitute each blank by a leaf or a cherry.
    auto partition_cases = [&](const TreePattern& p) {
        std::vector<TreePattern> cases;
        int blanks = p.blank_count();
        std::function<TreePattern(const TreePattern&, unsigned, int&)> subst =
            [&](const TreePattern& q, unsigned mask, int& next) -> TreePattern {
            switch (q.kind()) {
                case TreePattern::Kind::Blank: {
                    bool cherry = (mask >> next++) & 1u;
                    if (!cherry) return TreePattern::terminal_leaf();
                    return TreePattern::internal(TreePattern::blank(), TreePattern::blank());
                }
                case TreePattern::Kind::TerminalLeaf: return q;
                case TreePattern::Kind::Internal: {
                    TreePattern l = subst(q.left(), mask, next);
                    TreePattern r = subst(q.right(), mask, next);
                    return TreePattern::internal(l, r);
                }
            }
            throw DomainError("unreachable");
        };
        for (unsigned mask = 0; mask < (1u << blanks); ++mask) {
            int next = 0;
            cases.push_back(subst(p, mask, next));
        }
        return cases;
    };

    id_of(TreePattern::blank());

    std::vector<Expansion> equations;  // parallel to unknown_patterns
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        TreePattern p = unknown_patterns[static_cast<std::size_t>(id)];
        Expansion eq;
        for (const TreePattern& c : partition_cases(p)) {
            Expansion e = expand(c);
            for (auto& prod : e.products) eq.products.push_back(std::move(prod));
        }
        equations.resize(unknown_patterns.size());
        equations[static_cast<std::size_t>(id)] = std::move(eq);
    }
    equations.resize(unknown_patterns.size());

    std::vector<std::string> vars = {"x_L"};
    for (int i = 1; i <= k; ++i) vars.push_back("x_p" + std::to_string(i));
    vars.push_back("f");
    for (std::size_t i = 1; i < unknown_patterns.size(); ++i)
        vars.push_back("w" + std::to_string(i));
    RingPtr ring = make_ring(vars);

    WeightSystem sys;
    sys.mode = WeightMode::Multi;
    sys.ring = ring;
    for (int i = 0; i <= k; ++i) sys.param_vars.push_back(i);
    for (std::size_t i = 0; i < unknown_patterns.size(); ++i) {
        sys.unknown_vars.push_back(k + 1 + static_cast<int>(i));
        sys.unknown_words.push_back(unknown_patterns[i].word());
    }

    for (std::size_t i = 0; i < unknown_patterns.size(); ++i) {
        Poly rhs = Poly::zero(ring);
        for (const auto& prod : equations[i].products) {
            Exponents e(ring->vars.size(), 0);
            e[0] = prod.xl;
            for (int j = 0; j < k; ++j) e[static_cast<std::size_t>(1 + j)] = prod.xp[static_cast<std::size_t>(j)];
            Poly term = Poly::monomial(ring, std::move(e), 1);
            for (int fid : prod.factors)
                term = term * Poly::variable(ring, sys.unknown_vars[static_cast<std::size_t>(fid)]);
            rhs = rhs + term;
        }
        sys.rhs.push_back(std::move(rhs));
    }
    return sys;
}

}  // namespace treepat
