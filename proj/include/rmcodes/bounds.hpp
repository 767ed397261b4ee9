#pragma once

#include "rmcodes/numeric.hpp"

namespace rmcodes {

/// Exact number of permutations in S_n within Kendall distance r of any fixed
/// center: sum of the first r+1 coefficients of prod_{i=1}^{n} (1 + x + ... +
/// x^{i-1}). Requires 0 <= r <= n(n-1)/2.
BigInt ball_size_exact(int n, long long r);

/// Closed-form upper bound C(n + r - 1, n - 1) on the same quantity.
BigInt ball_size_upper(int n, long long r);

/// Sphere-packing bound floor(n! / |ball of radius floor((d-1)/2)|) on the
/// size of a code with minimum distance d.
BigInt packing_bound(int n, int d);

struct BoundReport {
    int n = 0, k = 0, d = 0;
    long long r = 0;  // floor((d - 1) / 2)
    BigInt ball_exact, ball_upper, packing_bound;
    BigInt gv_lhs, gv_rhs;
    bool gv_satisfied = false;
};

/// Evaluates the counting inequality guaranteeing that a greedy systematic
/// (n, k, d) code completes: lhs = sum_{i=1}^{d-1} C(k+i-2, i) *
/// C(d-1-i+n-k, n-k) * 2^{min(d-1-i, n-k)} against rhs = n!/k!.
/// The code exists whenever lhs < rhs. Requires 2 <= k < n, d >= 1.
BoundReport counting_bound_check(int n, int k, int d);

/// Largest k in [2, n-1] whose counting inequality holds, or 0 if none.
int max_k_counting_bound(int n, int d);

/// Normalized tail weight psi_d(k) = (k!/(k+d)!) * sum_{i=1}^{d-1} C(k+i, i) *
/// C(2d-1-i, d) * 2^{d-1-i}; below 1 it certifies the (k+d, k, d) family for
/// all larger k.
BigRat psi(int d, int k);

/// Limit ratio xi(d) = C(2d-2, d) * 2^{d-2} / (d-1)!.
BigRat xi(int d);

enum class CapacityRegime { linear, polynomial, quadratic };

/// Asymptotic rate of optimal codes with d = Theta(n) (capacity 1),
/// d = Theta(n^{1+eps}) for 0 < eps < 1 (capacity 1 - eps), and d = Theta(n^2)
/// (capacity 0).
BigRat capacity(CapacityRegime regime, const BigRat& epsilon = BigRat(0));

}  // namespace rmcodes
