#include "rmcodes/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rmcodes {

BigInt ball_size_exact(int n, long long r) {
    if (n < 1) throw std::invalid_argument("ball_size_exact: n must be >= 1");
    const long long diameter = static_cast<long long>(n) * (n - 1) / 2;
    if (r < 0 || r > diameter)
        throw std::invalid_argument("ball_size_exact: radius outside [0, n(n-1)/2]");
    // Coefficients 0..r of prod_{i=1}^{n} (1 + x + ... + x^{i-1}).
    std::vector<BigInt> c{1};
    for (int i = 2; i <= n; ++i) {
        const long long cap = std::min<long long>(r, c.size() - 1 + i - 1);
        std::vector<BigInt> prefix(c.size() + 1);
        for (size_t j = 0; j < c.size(); ++j) prefix[j + 1] = prefix[j] + c[j];
        std::vector<BigInt> next(static_cast<size_t>(cap) + 1);
        for (long long j = 0; j <= cap; ++j) {
            const long long lo = std::max<long long>(0, j - i + 1);
            const long long hi = std::min<long long>(j, static_cast<long long>(c.size()) - 1);
            next[static_cast<size_t>(j)] =
                prefix[static_cast<size_t>(hi) + 1] - prefix[static_cast<size_t>(lo)];
        }
        c = std::move(next);
    }
    BigInt total = 0;
    for (const BigInt& v : c) total += v;
    return total;
}

BigInt ball_size_upper(int n, long long r) {
    if (n < 1) throw std::invalid_argument("ball_size_upper: n must be >= 1");
    if (r < 0) throw std::invalid_argument("ball_size_upper: negative radius");
    return binomial(n + r - 1, n - 1);
}

BigInt packing_bound(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("packing_bound: need n >= 1, d >= 1");
    const long long diameter = static_cast<long long>(n) * (n - 1) / 2;
    const long long r = std::min<long long>((d - 1) / 2, diameter);
    return factorial(n) / ball_size_exact(n, r);
}

BoundReport counting_bound_check(int n, int k, int d) {
    if (!(2 <= k && k < n)) throw std::invalid_argument("counting_bound_check: need 2 <= k < n");
    if (d < 1) throw std::invalid_argument("counting_bound_check: d must be >= 1");
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.d = d;
    rep.r = (d - 1) / 2;
    const long long diameter = static_cast<long long>(n) * (n - 1) / 2;
    const long long rb = std::min<long long>(rep.r, diameter);
    rep.ball_exact = ball_size_exact(n, rb);
    rep.ball_upper = ball_size_upper(n, rb);
    rep.packing_bound = factorial(n) / rep.ball_exact;

    rep.gv_lhs = 0;
    for (int i = 1; i <= d - 1; ++i) {
        rep.gv_lhs += binomial(k + i - 2, i) * binomial(d - 1 - i + n - k, n - k) *
                      pow2(std::min<long long>(d - 1 - i, n - k));
    }
    rep.gv_rhs = factorial(n) / factorial(k);
    rep.gv_satisfied = rep.gv_lhs < rep.gv_rhs;
    return rep;
}

int max_k_counting_bound(int n, int d) {
    if (n < 2) throw std::invalid_argument("max_k_counting_bound: n must be >= 2");
    if (d < 1) throw std::invalid_argument("max_k_counting_bound: d must be >= 1");
    for (int k = n - 1; k >= 2; --k)
        if (counting_bound_check(n, k, d).gv_satisfied) return k;
    return 0;
}

BigRat psi(int d, int k) {
    if (d < 1 || k < 1) throw std::invalid_argument("psi: need d >= 1, k >= 1");
    BigInt sum = 0;
    for (int i = 1; i <= d - 1; ++i)
        sum += binomial(k + i, i) * binomial(2 * d - 1 - i, d) * pow2(d - 1 - i);
    BigInt denom = 1;  // (k+d)! / k!
    for (int j = k + 1; j <= k + d; ++j) denom *= j;
    return BigRat(sum, denom);
}

BigRat xi(int d) {
    if (d < 2) throw std::invalid_argument("xi: d must be >= 2");
    return BigRat(binomial(2 * d - 2, d) * pow2(d - 2), factorial(d - 1));
}

BigRat capacity(CapacityRegime regime, const BigRat& epsilon) {
    switch (regime) {
        case CapacityRegime::linear:
            return BigRat(1);
        case CapacityRegime::polynomial:
            if (!(epsilon > 0 && epsilon < 1))
                throw std::invalid_argument("capacity: polynomial regime needs 0 < epsilon < 1");
            return BigRat(1) - epsilon;
        case CapacityRegime::quadratic:
            return BigRat(0);
    }
    throw std::invalid_argument("capacity: unknown regime");
}

}  // namespace rmcodes
