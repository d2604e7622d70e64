#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fringe/rational.hpp"

namespace fringe {

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Model { Bst, Rrt };

// How two fringe trees are compared: as unlabelled binary trees, as ordered
// rooted trees, or as unordered rooted trees.
enum class TreeMode : int { Binary = 0, Ordered = 1, Unordered = 2 };

const char* to_string(TreeMode mode);

// ---------------------------------------------------------------------------
// Binary trees.
//
// Index-pool storage; root < 0 encodes the empty tree.  Keys are the in-order
// ranks 1..n and stamps are insertion-order ranks 1..n (a path from the root
// always has increasing stamps).
// ---------------------------------------------------------------------------
struct BinaryTree {
    struct Node {
        int32_t left = -1;
        int32_t right = -1;
        int32_t key = 0;
        int32_t stamp = 0;
    };
    std::vector<Node> nodes;
    int32_t root = -1;

    long size() const { return static_cast<long>(nodes.size()); }
    bool empty() const { return root < 0; }
};

// ---------------------------------------------------------------------------
// Ordered rooted trees (the recursive-tree side of the correspondence).
// Labels are 1..n with the root labelled 1; children are kept in increasing
// label order, which is exactly the order in which they were attached.
// ---------------------------------------------------------------------------
struct OrderedTree {
    struct Node {
        std::vector<int32_t> children;
        int32_t label = 0;
    };
    std::vector<Node> nodes;
    int32_t root = 0;

    long size() const { return static_cast<long>(nodes.size()); }
};

// Canonical encoding of a tree under a declared comparison mode.  The code is
// the textual canonical form (see docs/encodings.md); equal codes <=> the
// trees are isomorphic in the given mode.
struct TreeKey {
    TreeMode mode = TreeMode::Binary;
    std::string code;

    friend bool operator==(const TreeKey&, const TreeKey&) = default;
    friend auto operator<=>(const TreeKey&, const TreeKey&) = default;
};

// --- constructors ----------------------------------------------------------

BinaryTree bst_from_permutation(std::span<const int> perm);
BinaryTree bst_from_permutation(const std::vector<int>& perm);

// parents[i] is the parent (in 1..i+1-1) of node i+2; a sequence of length
// n-1 builds a recursive tree on n nodes.
OrderedTree rrt_from_attachments(std::span<const int> parents);
OrderedTree rrt_from_attachments(const std::vector<int>& parents);

// --- rotation (natural) correspondence -------------------------------------

BinaryTree rotation_to_binary(const OrderedTree& t);
OrderedTree rotation_to_ordered(const BinaryTree& b);

// --- fringe subtrees --------------------------------------------------------

// Detached copy of the fringe subtree rooted at v, stamps/keys relabelled
// 1..k preserving order.
BinaryTree fringe(const BinaryTree& t, int32_t v);
OrderedTree fringe(const OrderedTree& t, int32_t v);

TreeKey fringe_key(const BinaryTree& t, int32_t v, TreeMode mode = TreeMode::Binary);
TreeKey fringe_key(const OrderedTree& t, int32_t v, TreeMode mode);

std::map<long, long> fringe_size_multiset(const BinaryTree& t);
std::map<long, long> fringe_size_multiset(const OrderedTree& t);

// Subtree sizes per node index (|T(v)|).
std::vector<long> subtree_sizes(const BinaryTree& t);
std::vector<long> subtree_sizes(const OrderedTree& t);

// Canonical key of every fringe subtree, one per node index.
std::vector<TreeKey> all_fringe_keys(const BinaryTree& t, TreeMode mode = TreeMode::Binary);
std::vector<TreeKey> all_fringe_keys(const OrderedTree& t, TreeMode mode);

// --- canonical encodings ----------------------------------------------------

TreeKey tree_key(const BinaryTree& t, TreeMode mode = TreeMode::Binary);
TreeKey tree_key(const OrderedTree& t, TreeMode mode);

// Round-trip: rebuild a representative tree from its key.
BinaryTree binary_from_key(const TreeKey& key);
OrderedTree ordered_from_key(const TreeKey& key);

// --- counting ----------------------------------------------------------------

long count_by_size(const BinaryTree& t, long k);
long count_by_size(const OrderedTree& t, long k);
long count_matching(const BinaryTree& t, const TreeKey& key);
long count_matching(const OrderedTree& t, const TreeKey& key);

using BinaryPred = std::function<bool(const BinaryTree&)>;
using OrderedPred = std::function<bool(const OrderedTree&)>;
long count_property(const BinaryTree& t, long k, const BinaryPred& pred);
long count_property(const OrderedTree& t, long k, const OrderedPred& pred);

// --- additive functionals ----------------------------------------------------

// Toll functions evaluated on detached fringe copies.  The value depends only
// on the fringe's equivalence class under the toll's mode; a declared support
// bound K makes evaluation skip every fringe larger than K.
struct BinaryTollRat {
    std::optional<long> support_bound;
    std::function<Rat(const BinaryTree&)> eval;
};
struct BinaryTollReal {
    std::optional<long> support_bound;
    std::function<double(const BinaryTree&)> eval;
};
struct OrderedTollRat {
    std::optional<long> support_bound;
    std::function<Rat(const OrderedTree&)> eval;
};
struct OrderedTollReal {
    std::optional<long> support_bound;
    std::function<double(const OrderedTree&)> eval;
};

Rat additive_functional(const BinaryTree& t, const BinaryTollRat& f);
double additive_functional(const BinaryTree& t, const BinaryTollReal& f);
Rat additive_functional(const OrderedTree& t, const OrderedTollRat& f);
double additive_functional(const OrderedTree& t, const OrderedTollReal& f);

// --- applications -------------------------------------------------------------

std::map<long, long> outdegree_counts(const BinaryTree& t);
std::map<long, long> outdegree_counts(const OrderedTree& t);

long protected_count(const BinaryTree& t, long ell);
long protected_count(const OrderedTree& t, long ell);

// Whether the root's nearest leaf descendant is at distance >= ell.
bool root_protected(const BinaryTree& t, long ell);
bool root_protected(const OrderedTree& t, long ell);

// log P(tree) under the mode's product formula; P is the probability that the
// random model of the matching size produces this tree.
double shape_log_prob(const BinaryTree& t);                 // binary mode
double shape_log_prob(const OrderedTree& t, TreeMode mode); // ordered / unordered

// Exact rational shape probability (same product formulas).
Rat shape_prob(const BinaryTree& t);
Rat shape_prob(const OrderedTree& t, TreeMode mode);

}  // namespace fringe
