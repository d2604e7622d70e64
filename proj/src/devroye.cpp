#include "fringe/devroye.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fringe {

StampCircle make_circle(std::vector<int32_t> ranks) {
    const long p = static_cast<long>(ranks.size());
    std::vector<char> seen(p, 0);
    for (int32_t r : ranks) {
        if (r < 0 || r >= p || seen[r]) throw InvalidInput("make_circle: ranks must be a permutation of 0..p-1");
        seen[r] = 1;
    }
    return StampCircle{std::move(ranks)};
}

long circ_dist(long i, long j, long p) {
    long d = (i - j) % p;
    if (d < 0) d += p;
    return std::min(d, p - d);
}

int indicator_I(const StampCircle& c, long i, long k) {
    const long p = c.p();
    const long n = p - 1;
    if (k < 1 || k > n) throw InvalidInput("indicator_I: need 1 <= k <= n");
    if (k == n) return c.at(i - 1) == 0;  // window plus boundary covers the circle
    const int32_t lo = c.at(i - 1), hi = c.at(i + k);
    int32_t interior_min = std::numeric_limits<int32_t>::max();
    for (long j = i; j <= i + k - 1; ++j) interior_min = std::min(interior_min, c.at(j));
    return lo < interior_min && hi < interior_min;
}

int indicator_J(const StampCircle& c, long i, long k_minus_1) {
    const long p = c.p();
    const long k = k_minus_1 + 1;
    if (k < 1 || k > p) throw InvalidInput("indicator_J: need 1 <= k <= n");
    const int32_t lo = c.at(i - 1), hi = c.at(i + k - 1);
    // weak inequality: for k == n the two boundary reads hit the same slot
    if (!(lo <= hi)) return 0;
    int32_t interior_min = std::numeric_limits<int32_t>::max();
    for (long j = i; j <= i + k - 2; ++j) interior_min = std::min(interior_min, c.at(j));
    return hi < interior_min;
}

int indicator_I_linear(std::span<const uint64_t> s, long i, long k) {
    const long n = static_cast<long>(s.size());
    if (k < 1 || k > n || i < 1 || i + k - 1 > n) throw InvalidInput("indicator_I_linear: window out of range");
    uint64_t interior_min = std::numeric_limits<uint64_t>::max();
    for (long j = i; j <= i + k - 1; ++j) interior_min = std::min(interior_min, s[j - 1]);
    const bool lo_ok = (i == 1) || s[i - 2] < interior_min;
    const bool hi_ok = (i + k == n + 1) || s[i + k - 1] < interior_min;
    return lo_ok && hi_ok;
}

int indicator_J_linear(std::span<const uint64_t> s, long i, long k_minus_1) {
    const long m = static_cast<long>(s.size());  // m = n-1 stamps
    const long k = k_minus_1 + 1;
    if (k < 1 || i < 1 || i + k - 1 > m + 1) throw InvalidInput("indicator_J_linear: window out of range");
    const bool lo_boundary = (i == 1);
    const bool hi_boundary = (i + k - 1 == m + 1);
    if (hi_boundary && !lo_boundary) return 0;  // U_{i-1} > 0 = U_n
    uint64_t interior_min = std::numeric_limits<uint64_t>::max();
    for (long j = i; j <= i + k - 2; ++j) interior_min = std::min(interior_min, s[j - 1]);
    if (lo_boundary && hi_boundary) return 1;  // whole tree (k == n); empty interior check below holds
    if (lo_boundary) return s[i + k - 2] < interior_min;
    if (hi_boundary) return 0;
    return s[i - 2] <= s[i + k - 2] && s[i + k - 2] < interior_min;
}

std::vector<int> window_pattern(const StampCircle& c, long i, long k) {
    if (k < 1 || k > c.p()) throw InvalidInput("window_pattern: bad k");
    std::vector<int> offsets(k);
    std::iota(offsets.begin(), offsets.end(), 1);
    std::sort(offsets.begin(), offsets.end(),
              [&](int a, int b) { return c.at(i + a - 1) < c.at(i + b - 1); });
    return offsets;
}

std::vector<int> window_pattern_linear(std::span<const uint64_t> s, long i, long k) {
    if (k < 1 || i < 1 || i + k - 1 > static_cast<long>(s.size()))
        throw InvalidInput("window_pattern_linear: window out of range");
    std::vector<int> offsets(k);
    std::iota(offsets.begin(), offsets.end(), 1);
    std::sort(offsets.begin(), offsets.end(),
              [&](int a, int b) { return s[i + a - 2] < s[i + b - 2]; });
    return offsets;
}

BinaryTree bst_from_stamps(std::span<const uint64_t> s) {
    const long n = static_cast<long>(s.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return s[a - 1] < s[b - 1]; });
    return bst_from_permutation(order);
}

OrderedTree rrt_from_stamps(std::span<const uint64_t> s, long n) {
    if (static_cast<long>(s.size()) != n - 1) throw InvalidInput("rrt_from_stamps: need n-1 stamps");
    return rotation_to_ordered(bst_from_stamps(s));
}

// ---------------------------------------------------------------------------
// Evaluation of the linear and cyclic forms.
//
// Tolls with a support bound K cost O(n * K); unbounded tolls on long
// sequences fall back to building the tree once (the linear form equals the
// tree functional exactly, not just in law).
// ---------------------------------------------------------------------------

namespace {

constexpr long kDirectEvalLimit = 64;

template <typename Toll, typename Value>
Value eval_linear_bst_impl(std::span<const uint64_t> s, const Toll& f) {
    const long n = static_cast<long>(s.size());
    if (!f.support_bound && n > kDirectEvalLimit)
        return additive_functional(bst_from_stamps(s), f);
    const long kmax = f.support_bound ? std::min<long>(*f.support_bound, n) : n;
    Value total{};
    for (long k = 1; k <= kmax; ++k)
        for (long i = 1; i + k - 1 <= n; ++i)
            if (indicator_I_linear(s, i, k))
                total += f.eval(bst_from_permutation(window_pattern_linear(s, i, k)));
    return total;
}

template <typename Toll, typename Value>
Value eval_cyclic_bst_impl(const StampCircle& c, const Toll& f) {
    const long n = c.p() - 1;
    const long kmax = f.support_bound ? std::min<long>(*f.support_bound, n) : n;
    Value total{};
    for (long k = 1; k <= kmax; ++k)
        for (long i = 1; i <= n + 1; ++i)
            if (indicator_I(c, i, k))
                total += f.eval(bst_from_permutation(window_pattern(c, i, k)));
    return total;
}

// the ordered fringe corresponding to a binary window of length k-1
template <typename Toll, typename Value>
Value eval_linear_rrt_impl(std::span<const uint64_t> s, long n, const Toll& f) {
    if (static_cast<long>(s.size()) != n - 1) throw InvalidInput("eval_linear_rrt: need n-1 stamps");
    if (!f.support_bound && n > kDirectEvalLimit)
        return additive_functional(rrt_from_stamps(s, n), f);
    const long kmax = f.support_bound ? std::min<long>(*f.support_bound, n) : n;
    Value total{};
    for (long k = 1; k <= kmax; ++k) {
        for (long i = 1; i + k - 1 <= n; ++i) {
            if (!indicator_J_linear(s, i, k - 1)) continue;
            BinaryTree window = k == 1 ? BinaryTree{} : bst_from_permutation(window_pattern_linear(s, i, k - 1));
            total += f.eval(rotation_to_ordered(window));
        }
    }
    return total;
}

template <typename Toll, typename Value>
Value eval_cyclic_rrt_impl(const StampCircle& c, const Toll& f) {
    const long n = c.p();
    const long kmax = f.support_bound ? std::min<long>(*f.support_bound, n) : n;
    Value total{};
    for (long k = 1; k <= kmax; ++k) {
        for (long i = 1; i <= n; ++i) {
            if (!indicator_J(c, i, k - 1)) continue;
            BinaryTree window = k == 1 ? BinaryTree{} : bst_from_permutation(window_pattern(c, i, k - 1));
            total += f.eval(rotation_to_ordered(window));
        }
    }
    return total;
}

}  // namespace

Rat eval_linear_bst(std::span<const uint64_t> s, const BinaryTollRat& f) {
    return eval_linear_bst_impl<BinaryTollRat, Rat>(s, f);
}
double eval_linear_bst(std::span<const uint64_t> s, const BinaryTollReal& f) {
    return eval_linear_bst_impl<BinaryTollReal, double>(s, f);
}
Rat eval_cyclic_bst(const StampCircle& c, const BinaryTollRat& f) {
    return eval_cyclic_bst_impl<BinaryTollRat, Rat>(c, f);
}
double eval_cyclic_bst(const StampCircle& c, const BinaryTollReal& f) {
    return eval_cyclic_bst_impl<BinaryTollReal, double>(c, f);
}
Rat eval_linear_rrt(std::span<const uint64_t> s, long n, const OrderedTollRat& f) {
    return eval_linear_rrt_impl<OrderedTollRat, Rat>(s, n, f);
}
double eval_linear_rrt(std::span<const uint64_t> s, long n, const OrderedTollReal& f) {
    return eval_linear_rrt_impl<OrderedTollReal, double>(s, n, f);
}
Rat eval_cyclic_rrt(const StampCircle& c, const OrderedTollRat& f) {
    return eval_cyclic_rrt_impl<OrderedTollRat, Rat>(c, f);
}
double eval_cyclic_rrt(const StampCircle& c, const OrderedTollReal& f) {
    return eval_cyclic_rrt_impl<OrderedTollReal, double>(c, f);
}

}  // namespace fringe
