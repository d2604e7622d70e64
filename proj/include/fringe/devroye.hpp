#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fringe/trees.hpp"

namespace fringe {

// Cyclic sequence of distinct ranks realizing the uniform-stamp representation.
// ranks is a permutation of 0..p-1; positions are 1-based and wrap mod p, so
// U_i == ranks[i mod p].  For the binary search tree of size n the period is
// p = n+1, for the recursive tree of size n it is p = n.
struct StampCircle {
    std::vector<int32_t> ranks;

    long p() const { return static_cast<long>(ranks.size()); }
    int32_t at(long i) const {
        long m = i % p();
        if (m < 0) m += p();
        return ranks[m];
    }
};

StampCircle make_circle(std::vector<int32_t> ranks);

// circular distance |i-j|_p
long circ_dist(long i, long j, long p);

// I_{i,k}: U_{i-1} and U_{i+k} are the two smallest among U_{i-1},...,U_{i+k}.
// Defined cyclically; k == n (whole circle) degenerates to "U_{i-1} is minimal".
int indicator_I(const StampCircle& c, long i, long k);

// J_{i,k-1}: U_{i-1} <= U_{i+k-1} < min_{i<=j<=i+k-2} U_j (empty min = +inf).
int indicator_J(const StampCircle& c, long i, long k_minus_1);

// Linear variants over a stamp sequence s[0..n-1] holding the stamps of
// positions 1..n; the boundary values U_0 and U_{n+1} act as -infinity.
int indicator_I_linear(std::span<const uint64_t> s, long i, long k);
int indicator_J_linear(std::span<const uint64_t> s, long i, long k_minus_1);

// Insertion-order pattern of the length-k window starting at position i:
// pattern[t-1] is the offset (1..k) of the t-th smallest stamp, so feeding the
// pattern to bst_from_permutation rebuilds the window's fringe tree.
std::vector<int> window_pattern(const StampCircle& c, long i, long k);
std::vector<int> window_pattern_linear(std::span<const uint64_t> s, long i, long k);

// Tree built from a stamp sequence (keys are positions, insertion in stamp
// order); the linear representation sums below match it exactly.
BinaryTree bst_from_stamps(std::span<const uint64_t> s);
// n-1 stamps -> recursive tree on n nodes via the natural correspondence.
OrderedTree rrt_from_stamps(std::span<const uint64_t> s, long n);

// Linear and cyclic evaluation of additive functionals.
Rat eval_linear_bst(std::span<const uint64_t> s, const BinaryTollRat& f);
double eval_linear_bst(std::span<const uint64_t> s, const BinaryTollReal& f);
Rat eval_cyclic_bst(const StampCircle& c, const BinaryTollRat& f);
double eval_cyclic_bst(const StampCircle& c, const BinaryTollReal& f);

Rat eval_linear_rrt(std::span<const uint64_t> s, long n, const OrderedTollRat& f);
double eval_linear_rrt(std::span<const uint64_t> s, long n, const OrderedTollReal& f);
Rat eval_cyclic_rrt(const StampCircle& c, const OrderedTollRat& f);
double eval_cyclic_rrt(const StampCircle& c, const OrderedTollReal& f);

}  // namespace fringe
