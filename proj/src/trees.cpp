#include "fringe/trees.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fringe {

const char* to_string(TreeMode mode) {
    switch (mode) {
        case TreeMode::Binary: return "binary";
        case TreeMode::Ordered: return "ordered";
        case TreeMode::Unordered: return "unordered";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

BinaryTree bst_from_permutation(std::span<const int> perm) {
    const long n = static_cast<long>(perm.size());
    std::vector<char> seen(n + 1, 0);
    for (int key : perm) {
        if (key < 1 || key > n || seen[key]) throw InvalidInput("bst_from_permutation: not a permutation of 1..n");
        seen[key] = 1;
    }
    BinaryTree t;
    t.nodes.resize(n);
    if (n == 0) return t;
    // nodes are stored in key order: node index key-1
    for (long i = 0; i < n; ++i) {
        t.nodes[i].key = static_cast<int32_t>(i + 1);
    }
    t.root = perm[0] - 1;
    t.nodes[t.root].stamp = 1;
    for (long step = 1; step < n; ++step) {
        const int32_t idx = perm[step] - 1;  // node index == key - 1
        int32_t cur = t.root;
        for (;;) {
            if (idx < cur) {
                if (t.nodes[cur].left < 0) {
                    t.nodes[cur].left = idx;
                    break;
                }
                cur = t.nodes[cur].left;
            } else {
                if (t.nodes[cur].right < 0) {
                    t.nodes[cur].right = idx;
                    break;
                }
                cur = t.nodes[cur].right;
            }
        }
        t.nodes[idx].stamp = static_cast<int32_t>(step + 1);
    }
    return t;
}

BinaryTree bst_from_permutation(const std::vector<int>& perm) {
    return bst_from_permutation(std::span<const int>(perm));
}

OrderedTree rrt_from_attachments(std::span<const int> parents) {
    const long n = static_cast<long>(parents.size()) + 1;
    OrderedTree t;
    t.nodes.resize(n);
    t.root = 0;
    for (long i = 0; i < n; ++i) t.nodes[i].label = static_cast<int32_t>(i + 1);
    for (long i = 0; i < n - 1; ++i) {
        const int p = parents[i];
        if (p < 1 || p > i + 1) throw InvalidInput("rrt_from_attachments: parent out of range");
        // node i+2 attaches to p; children stay in label order because nodes
        // arrive in label order
        t.nodes[p - 1].children.push_back(static_cast<int32_t>(i + 1));
    }
    return t;
}

OrderedTree rrt_from_attachments(const std::vector<int>& parents) {
    return rrt_from_attachments(std::span<const int>(parents));
}

// ---------------------------------------------------------------------------
// Rotation correspondence
// ---------------------------------------------------------------------------

// Ordered tree on n nodes -> binary tree on n-1 nodes: the root's children
// become the right spine, the first child of any node becomes its left child,
// the next sibling its right child.  Labels (minus the root) transport to
// stamps, order preserved.
BinaryTree rotation_to_binary(const OrderedTree& t) {
    const long n = t.size();
    if (n == 0) throw InvalidInput("rotation_to_binary: empty ordered tree");
    BinaryTree b;
    b.nodes.resize(n - 1);
    if (n == 1) {
        b.root = -1;
        return b;  // single ordered node corresponds to the empty binary tree
    }
    // binary node for ordered node with label l >= 2 lives at index l-2
    std::vector<int32_t> todo{t.root};
    while (!todo.empty()) {
        int32_t v = todo.back();
        todo.pop_back();
        const auto& ch = t.nodes[v].children;
        for (size_t i = 0; i < ch.size(); ++i) {
            const int32_t ci = t.nodes[ch[i]].label - 2;
            // eldest child of a non-root node hangs to the left of its parent
            if (v != t.root && i == 0) b.nodes[t.nodes[v].label - 2].left = ci;
            // next sibling hangs to the right of the previous one
            if (i + 1 < ch.size()) b.nodes[ci].right = t.nodes[ch[i + 1]].label - 2;
            todo.push_back(ch[i]);
        }
        if (v == t.root && !ch.empty()) b.root = t.nodes[ch[0]].label - 2;
    }
    // stamps: ordered labels 2..n become stamps 1..n-1
    for (long i = 0; i + 1 < n; ++i) b.nodes[i].stamp = static_cast<int32_t>(i + 1);
    // keys: in-order positions
    {
        int32_t next_key = 1;
        std::vector<std::pair<int32_t, bool>> st{{b.root, false}};
        while (!st.empty()) {
            auto [v, expanded] = st.back();
            st.pop_back();
            if (v < 0) continue;
            if (expanded) {
                b.nodes[v].key = next_key++;
            } else {
                st.push_back({b.nodes[v].right, false});
                st.push_back({v, true});
                st.push_back({b.nodes[v].left, false});
            }
        }
    }
    return b;
}

OrderedTree rotation_to_ordered(const BinaryTree& b) {
    const long n = b.size();
    OrderedTree t;
    t.nodes.resize(n + 1);
    t.root = 0;
    // ordered node index: binary node with stamp s -> index s (root at 0)
    // to make labels 1..n+1 with root 1 and increasing along edges.
    std::vector<int32_t> by_stamp(n + 1, -1);
    for (long i = 0; i < n; ++i) by_stamp[b.nodes[i].stamp] = static_cast<int32_t>(i);
    for (long l = 0; l <= n; ++l) t.nodes[l].label = static_cast<int32_t>(l + 1);
    if (n == 0) return t;

    // children of the ordered root: the right spine from the binary root;
    // children of any other node: its binary left child plus that child's
    // right spine.
    auto attach_spine = [&](int32_t parent_idx, int32_t spine_head) {
        for (int32_t u = spine_head; u >= 0; u = b.nodes[u].right)
            t.nodes[parent_idx].children.push_back(b.nodes[u].stamp);
    };
    attach_spine(0, b.root);
    for (long i = 0; i < n; ++i)
        attach_spine(b.nodes[i].stamp, b.nodes[i].left);
    // children were appended in spine order, which is increasing-stamp order
    // along a right spine (stamps increase downwards), so label order holds.
    return t;
}

// ---------------------------------------------------------------------------
// Fringe subtrees
// ---------------------------------------------------------------------------

static void check_node(long size, int32_t v) {
    if (v < 0 || v >= size) throw InvalidInput("invalid node index");
}

BinaryTree fringe(const BinaryTree& t, int32_t v) {
    check_node(t.size(), v);
    // collect nodes, then relabel keys and stamps 1..k preserving order
    std::vector<int32_t> found;
    std::vector<int32_t> todo{v};
    while (!todo.empty()) {
        int32_t u = todo.back();
        todo.pop_back();
        found.push_back(u);
        if (t.nodes[u].left >= 0) todo.push_back(t.nodes[u].left);
        if (t.nodes[u].right >= 0) todo.push_back(t.nodes[u].right);
    }
    std::vector<int32_t> by_key(found), by_stamp(found);
    std::sort(by_key.begin(), by_key.end(),
              [&](int32_t a, int32_t c) { return t.nodes[a].key < t.nodes[c].key; });
    std::sort(by_stamp.begin(), by_stamp.end(),
              [&](int32_t a, int32_t c) { return t.nodes[a].stamp < t.nodes[c].stamp; });
    std::vector<int32_t> new_index(t.size(), -1), new_key(t.size()), new_stamp(t.size());
    for (size_t i = 0; i < found.size(); ++i) {
        new_index[by_key[i]] = static_cast<int32_t>(i);
        new_key[by_key[i]] = static_cast<int32_t>(i + 1);
        new_stamp[by_stamp[i]] = static_cast<int32_t>(i + 1);
    }
    BinaryTree out;
    out.nodes.resize(found.size());
    out.root = new_index[v];
    for (int32_t u : found) {
        auto& nn = out.nodes[new_index[u]];
        nn.key = new_key[u];
        nn.stamp = new_stamp[u];
        nn.left = t.nodes[u].left >= 0 ? new_index[t.nodes[u].left] : -1;
        nn.right = t.nodes[u].right >= 0 ? new_index[t.nodes[u].right] : -1;
    }
    return out;
}

OrderedTree fringe(const OrderedTree& t, int32_t v) {
    check_node(t.size(), v);
    std::vector<int32_t> found;
    std::vector<int32_t> todo{v};
    while (!todo.empty()) {
        int32_t u = todo.back();
        todo.pop_back();
        found.push_back(u);
        for (int32_t c : t.nodes[u].children) todo.push_back(c);
    }
    std::sort(found.begin(), found.end(),
              [&](int32_t a, int32_t c) { return t.nodes[a].label < t.nodes[c].label; });
    std::vector<int32_t> new_index(t.size(), -1);
    for (size_t i = 0; i < found.size(); ++i) new_index[found[i]] = static_cast<int32_t>(i);
    OrderedTree out;
    out.nodes.resize(found.size());
    out.root = new_index[v];
    for (int32_t u : found) {
        auto& nn = out.nodes[new_index[u]];
        nn.label = new_index[u] + 1;
        for (int32_t c : t.nodes[u].children) nn.children.push_back(new_index[c]);
        std::sort(nn.children.begin(), nn.children.end());  // label order
    }
    return out;
}

std::vector<long> subtree_sizes(const BinaryTree& t) {
    std::vector<long> sz(t.size(), 0);
    // post-order without recursion
    std::vector<std::pair<int32_t, bool>> st;
    if (t.root >= 0) st.push_back({t.root, false});
    while (!st.empty()) {
        auto [v, expanded] = st.back();
        st.pop_back();
        if (expanded) {
            long s = 1;
            if (t.nodes[v].left >= 0) s += sz[t.nodes[v].left];
            if (t.nodes[v].right >= 0) s += sz[t.nodes[v].right];
            sz[v] = s;
        } else {
            st.push_back({v, true});
            if (t.nodes[v].left >= 0) st.push_back({t.nodes[v].left, false});
            if (t.nodes[v].right >= 0) st.push_back({t.nodes[v].right, false});
        }
    }
    return sz;
}

std::vector<long> subtree_sizes(const OrderedTree& t) {
    std::vector<long> sz(t.size(), 0);
    std::vector<std::pair<int32_t, bool>> st{{t.root, false}};
    while (!st.empty()) {
        auto [v, expanded] = st.back();
        st.pop_back();
        if (expanded) {
            long s = 1;
            for (int32_t c : t.nodes[v].children) s += sz[c];
            sz[v] = s;
        } else {
            st.push_back({v, true});
            for (int32_t c : t.nodes[v].children) st.push_back({c, false});
        }
    }
    return sz;
}

std::map<long, long> fringe_size_multiset(const BinaryTree& t) {
    std::map<long, long> out;
    for (long s : subtree_sizes(t)) ++out[s];
    return out;
}

std::map<long, long> fringe_size_multiset(const OrderedTree& t) {
    std::map<long, long> out;
    for (long s : subtree_sizes(t)) ++out[s];
    return out;
}

// ---------------------------------------------------------------------------
// Canonical encodings (see docs/encodings.md)
//   binary:     empty = "."      node = "(" left right ")"
//   ordered:    node = "(" child... ")"
//   unordered:  node = "(" sorted(child...) ")"   (lexicographically minimal)
// ---------------------------------------------------------------------------

static void binary_code(const BinaryTree& t, int32_t v, std::string& out) {
    if (v < 0) {
        out += '.';
        return;
    }
    out += '(';
    binary_code(t, t.nodes[v].left, out);
    binary_code(t, t.nodes[v].right, out);
    out += ')';
}

static std::string ordered_code(const OrderedTree& t, int32_t v, bool canonical_sort) {
    std::vector<std::string> parts;
    parts.reserve(t.nodes[v].children.size());
    for (int32_t c : t.nodes[v].children) parts.push_back(ordered_code(t, c, canonical_sort));
    if (canonical_sort) std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (auto& p : parts) out += p;
    out += ')';
    return out;
}

TreeKey tree_key(const BinaryTree& t, TreeMode mode) {
    if (mode == TreeMode::Binary) {
        std::string code;
        binary_code(t, t.root, code);
        return {mode, std::move(code)};
    }
    return tree_key(rotation_to_ordered(t), mode);
}

TreeKey tree_key(const OrderedTree& t, TreeMode mode) {
    if (mode == TreeMode::Binary) throw InvalidInput("tree_key: binary mode needs a binary tree");
    return {mode, ordered_code(t, t.root, mode == TreeMode::Unordered)};
}

TreeKey fringe_key(const BinaryTree& t, int32_t v, TreeMode mode) {
    check_node(t.size(), v);
    if (mode == TreeMode::Binary) {
        std::string code;
        binary_code(t, v, code);
        return {mode, std::move(code)};
    }
    return tree_key(fringe(t, v), mode);
}

TreeKey fringe_key(const OrderedTree& t, int32_t v, TreeMode mode) {
    check_node(t.size(), v);
    if (mode == TreeMode::Binary) throw InvalidInput("fringe_key: binary mode needs a binary tree");
    OrderedTree sub = fringe(t, v);
    return {mode, ordered_code(sub, sub.root, mode == TreeMode::Unordered)};
}

std::vector<TreeKey> all_fringe_keys(const BinaryTree& t, TreeMode mode) {
    std::vector<TreeKey> out(t.size());
    if (mode == TreeMode::Binary) {
        // bottom-up, sharing children codes
        std::vector<std::string> code(t.size());
        std::vector<std::pair<int32_t, bool>> st;
        if (t.root >= 0) st.push_back({t.root, false});
        while (!st.empty()) {
            auto [v, expanded] = st.back();
            st.pop_back();
            if (expanded) {
                const auto& n = t.nodes[v];
                std::string c = "(";
                c += n.left >= 0 ? code[n.left] : ".";
                c += n.right >= 0 ? code[n.right] : ".";
                c += ')';
                code[v] = std::move(c);
                out[v] = {mode, code[v]};
            } else {
                st.push_back({v, true});
                if (t.nodes[v].left >= 0) st.push_back({t.nodes[v].left, false});
                if (t.nodes[v].right >= 0) st.push_back({t.nodes[v].right, false});
            }
        }
        return out;
    }
    for (long v = 0; v < t.size(); ++v) out[v] = fringe_key(t, static_cast<int32_t>(v), mode);
    return out;
}

std::vector<TreeKey> all_fringe_keys(const OrderedTree& t, TreeMode mode) {
    if (mode == TreeMode::Binary) throw InvalidInput("all_fringe_keys: binary mode needs a binary tree");
    std::vector<std::string> code(t.size());
    std::vector<std::pair<int32_t, bool>> st{{t.root, false}};
    const bool sort_children = mode == TreeMode::Unordered;
    while (!st.empty()) {
        auto [v, expanded] = st.back();
        st.pop_back();
        if (expanded) {
            std::vector<std::string> parts;
            parts.reserve(t.nodes[v].children.size());
            for (int32_t c : t.nodes[v].children) parts.push_back(code[c]);
            if (sort_children) std::sort(parts.begin(), parts.end());
            std::string c = "(";
            for (auto& p : parts) c += p;
            c += ')';
            code[v] = std::move(c);
        } else {
            st.push_back({v, true});
            for (int32_t c : t.nodes[v].children) st.push_back({c, false});
        }
    }
    std::vector<TreeKey> out(t.size());
    for (long v = 0; v < t.size(); ++v) out[v] = {mode, code[v]};
    return out;
}

// --- decoding ---------------------------------------------------------------

static int32_t parse_binary(const std::string& s, size_t& pos, BinaryTree& t) {
    if (pos >= s.size()) throw InvalidInput("binary_from_key: truncated code");
    if (s[pos] == '.') {
        ++pos;
        return -1;
    }
    if (s[pos] != '(') throw InvalidInput("binary_from_key: bad code");
    ++pos;
    const int32_t me = static_cast<int32_t>(t.nodes.size());
    t.nodes.emplace_back();
    int32_t l = parse_binary(s, pos, t);
    int32_t r = parse_binary(s, pos, t);
    if (pos >= s.size() || s[pos] != ')') throw InvalidInput("binary_from_key: bad code");
    ++pos;
    t.nodes[me].left = l;
    t.nodes[me].right = r;
    return me;
}

BinaryTree binary_from_key(const TreeKey& key) {
    if (key.mode != TreeMode::Binary) throw InvalidInput("binary_from_key: mode mismatch");
    BinaryTree t;
    size_t pos = 0;
    t.root = parse_binary(key.code, pos, t);
    if (pos != key.code.size()) throw InvalidInput("binary_from_key: trailing garbage");
    // fill keys (in-order) and stamps (level-agnostic canonical: BFS order is
    // not increasing in general, so derive stamps from a canonical insertion:
    // parent before child, left before right == preorder works)
    long n = t.size();
    if (n > 0) {
        int32_t next_key = 1, next_stamp = 1;
        std::vector<std::pair<int32_t, bool>> st{{t.root, false}};
        while (!st.empty()) {
            auto [v, expanded] = st.back();
            st.pop_back();
            if (v < 0) continue;
            if (expanded) {
                t.nodes[v].key = next_key++;
            } else {
                st.push_back({t.nodes[v].right, false});
                st.push_back({v, true});
                st.push_back({t.nodes[v].left, false});
            }
        }
        // preorder stamps satisfy the increasing-tree property
        std::vector<int32_t> stack2{t.root};
        while (!stack2.empty()) {
            int32_t v = stack2.back();
            stack2.pop_back();
            t.nodes[v].stamp = next_stamp++;
            if (t.nodes[v].right >= 0) stack2.push_back(t.nodes[v].right);
            if (t.nodes[v].left >= 0) stack2.push_back(t.nodes[v].left);
        }
    }
    return t;
}

static int32_t parse_ordered(const std::string& s, size_t& pos, OrderedTree& t) {
    if (pos >= s.size() || s[pos] != '(') throw InvalidInput("ordered_from_key: bad code");
    ++pos;
    const int32_t me = static_cast<int32_t>(t.nodes.size());
    t.nodes.emplace_back();
    while (pos < s.size() && s[pos] == '(') {
        int32_t c = parse_ordered(s, pos, t);
        t.nodes[me].children.push_back(c);
    }
    if (pos >= s.size() || s[pos] != ')') throw InvalidInput("ordered_from_key: bad code");
    ++pos;
    return me;
}

OrderedTree ordered_from_key(const TreeKey& key) {
    if (key.mode == TreeMode::Binary) throw InvalidInput("ordered_from_key: mode mismatch");
    OrderedTree t;
    size_t pos = 0;
    t.root = parse_ordered(key.code, pos, t);
    if (pos != key.code.size()) throw InvalidInput("ordered_from_key: trailing garbage");
    // labels: BFS assigns parent-before-child, sibling order preserved
    std::vector<int32_t> order;
    order.push_back(t.root);
    for (size_t qi = 0; qi < order.size(); ++qi)
        for (int32_t c : t.nodes[order[qi]].children) order.push_back(c);
    for (size_t i = 0; i < order.size(); ++i) t.nodes[order[i]].label = static_cast<int32_t>(i + 1);
    return t;
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

long count_by_size(const BinaryTree& t, long k) {
    if (k < 1) return 0;
    long c = 0;
    for (long s : subtree_sizes(t)) c += (s == k);
    return c;
}

long count_by_size(const OrderedTree& t, long k) {
    if (k < 1) return 0;
    long c = 0;
    for (long s : subtree_sizes(t)) c += (s == k);
    return c;
}

long count_matching(const BinaryTree& t, const TreeKey& key) {
    long c = 0;
    for (const auto& k : all_fringe_keys(t, key.mode)) c += (k.code == key.code);
    return c;
}

long count_matching(const OrderedTree& t, const TreeKey& key) {
    long c = 0;
    for (const auto& k : all_fringe_keys(t, key.mode)) c += (k.code == key.code);
    return c;
}

long count_property(const BinaryTree& t, long k, const BinaryPred& pred) {
    auto sz = subtree_sizes(t);
    long c = 0;
    for (long v = 0; v < t.size(); ++v)
        if (sz[v] == k && pred(fringe(t, static_cast<int32_t>(v)))) ++c;
    return c;
}

long count_property(const OrderedTree& t, long k, const OrderedPred& pred) {
    auto sz = subtree_sizes(t);
    long c = 0;
    for (long v = 0; v < t.size(); ++v)
        if (sz[v] == k && pred(fringe(t, static_cast<int32_t>(v)))) ++c;
    return c;
}

// ---------------------------------------------------------------------------
// Additive functionals F(T) = sum_v f(T(v))
// ---------------------------------------------------------------------------

template <typename Tree, typename Toll, typename Value>
static Value additive_impl(const Tree& t, const Toll& f) {
    Value total{};
    auto sz = subtree_sizes(t);
    for (long v = 0; v < t.size(); ++v) {
        if (f.support_bound && sz[v] > *f.support_bound) continue;
        total += f.eval(fringe(t, static_cast<int32_t>(v)));
    }
    return total;
}

Rat additive_functional(const BinaryTree& t, const BinaryTollRat& f) {
    return additive_impl<BinaryTree, BinaryTollRat, Rat>(t, f);
}
double additive_functional(const BinaryTree& t, const BinaryTollReal& f) {
    return additive_impl<BinaryTree, BinaryTollReal, double>(t, f);
}
Rat additive_functional(const OrderedTree& t, const OrderedTollRat& f) {
    return additive_impl<OrderedTree, OrderedTollRat, Rat>(t, f);
}
double additive_functional(const OrderedTree& t, const OrderedTollReal& f) {
    return additive_impl<OrderedTree, OrderedTollReal, double>(t, f);
}

// ---------------------------------------------------------------------------
// Applications
// ---------------------------------------------------------------------------

std::map<long, long> outdegree_counts(const BinaryTree& t) {
    std::map<long, long> out;
    for (const auto& n : t.nodes) ++out[(n.left >= 0) + (n.right >= 0)];
    return out;
}

std::map<long, long> outdegree_counts(const OrderedTree& t) {
    std::map<long, long> out;
    for (const auto& n : t.nodes) ++out[static_cast<long>(n.children.size())];
    return out;
}

// minimal leaf depth per node, capped at `cap` (values > cap are reported as
// cap+1; enough to decide ell-protection for ell <= cap)
static std::vector<int> min_leaf_depths(const BinaryTree& t, int cap) {
    std::vector<int> mld(t.size(), 0);
    std::vector<std::pair<int32_t, bool>> st;
    if (t.root >= 0) st.push_back({t.root, false});
    while (!st.empty()) {
        auto [v, expanded] = st.back();
        st.pop_back();
        if (expanded) {
            const auto& n = t.nodes[v];
            if (n.left < 0 && n.right < 0) {
                mld[v] = 0;
            } else {
                int m = cap + 1;
                if (n.left >= 0) m = std::min(m, mld[n.left] + 1);
                if (n.right >= 0) m = std::min(m, mld[n.right] + 1);
                mld[v] = std::min(m, cap + 1);
            }
        } else {
            st.push_back({v, true});
            if (t.nodes[v].left >= 0) st.push_back({t.nodes[v].left, false});
            if (t.nodes[v].right >= 0) st.push_back({t.nodes[v].right, false});
        }
    }
    return mld;
}

static std::vector<int> min_leaf_depths(const OrderedTree& t, int cap) {
    std::vector<int> mld(t.size(), 0);
    std::vector<std::pair<int32_t, bool>> st{{t.root, false}};
    while (!st.empty()) {
        auto [v, expanded] = st.back();
        st.pop_back();
        if (expanded) {
            const auto& n = t.nodes[v];
            if (n.children.empty()) {
                mld[v] = 0;
            } else {
                int m = cap + 1;
                for (int32_t c : n.children) m = std::min(m, mld[c] + 1);
                mld[v] = std::min(m, cap + 1);
            }
        } else {
            st.push_back({v, true});
            for (int32_t c : t.nodes[v].children) st.push_back({c, false});
        }
    }
    return mld;
}

long protected_count(const BinaryTree& t, long ell) {
    if (ell < 1) throw InvalidInput("protected_count: ell >= 1 required");
    auto mld = min_leaf_depths(t, static_cast<int>(ell));
    long c = 0;
    for (int m : mld) c += (m >= ell);
    return c;
}

long protected_count(const OrderedTree& t, long ell) {
    if (ell < 1) throw InvalidInput("protected_count: ell >= 1 required");
    auto mld = min_leaf_depths(t, static_cast<int>(ell));
    long c = 0;
    for (int m : mld) c += (m >= ell);
    return c;
}

bool root_protected(const BinaryTree& t, long ell) {
    if (t.root < 0) return false;
    return min_leaf_depths(t, static_cast<int>(ell))[t.root] >= ell;
}

bool root_protected(const OrderedTree& t, long ell) {
    return min_leaf_depths(t, static_cast<int>(ell))[t.root] >= ell;
}

// ---------------------------------------------------------------------------
// Shape functionals
// ---------------------------------------------------------------------------

double shape_log_prob(const BinaryTree& t) {
    double s = 0.0;
    for (long z : subtree_sizes(t)) s -= std::log(static_cast<double>(z));
    return s;
}

Rat shape_prob(const BinaryTree& t) {
    Rat p = 1;
    for (long z : subtree_sizes(t)) p /= z;
    return p;
}

// number of child permutations extending to automorphisms: product of nu!
// over groups of children with identical unordered codes
static Rat symmetry_factor(const std::vector<std::string>& child_codes) {
    std::map<std::string, long> groups;
    for (const auto& c : child_codes) ++groups[c];
    Rat s = 1;
    for (auto& [_, nu] : groups)
        for (long i = 2; i <= nu; ++i) s *= i;
    return s;
}

Rat shape_prob(const OrderedTree& t, TreeMode mode) {
    const long n = t.size();
    auto sz = subtree_sizes(t);
    if (mode == TreeMode::Unordered) {
        Rat p = n;
        auto keys = all_fringe_keys(t, TreeMode::Unordered);
        for (long v = 0; v < n; ++v) {
            std::vector<std::string> child_codes;
            for (int32_t c : t.nodes[v].children) child_codes.push_back(keys[c].code);
            p /= symmetry_factor(child_codes) * Rat(sz[v]);
        }
        return p;
    }
    if (mode == TreeMode::Ordered) {
        Rat p = 1;
        for (long v = 0; v < n; ++v) {
            const auto& ch = t.nodes[v].children;
            long tail = 0;
            for (size_t i = ch.size(); i-- > 0;) {
                tail += sz[ch[i]];
                p /= tail;
            }
        }
        return p;
    }
    throw InvalidInput("shape_prob: binary mode needs a binary tree");
}

double shape_log_prob(const OrderedTree& t, TreeMode mode) {
    // log of the exact product; computed in doubles term by term
    const long n = t.size();
    auto sz = subtree_sizes(t);
    if (mode == TreeMode::Unordered) {
        double s = std::log(static_cast<double>(n));
        auto keys = all_fringe_keys(t, TreeMode::Unordered);
        for (long v = 0; v < n; ++v) {
            std::vector<std::string> child_codes;
            for (int32_t c : t.nodes[v].children) child_codes.push_back(keys[c].code);
            s -= std::log(to_double(symmetry_factor(child_codes)));
            s -= std::log(static_cast<double>(sz[v]));
        }
        return s;
    }
    if (mode == TreeMode::Ordered) {
        double s = 0.0;
        for (long v = 0; v < n; ++v) {
            const auto& ch = t.nodes[v].children;
            long tail = 0;
            for (size_t i = ch.size(); i-- > 0;) {
                tail += sz[ch[i]];
                s -= std::log(static_cast<double>(tail));
            }
        }
        return s;
    }
    throw InvalidInput("shape_log_prob: binary mode needs a binary tree");
}

}  // namespace fringe
