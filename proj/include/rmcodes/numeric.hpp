#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

namespace rmcodes {

/// Exact integer / rational types used wherever counts outgrow 64 bits
/// (ball sizes, factorials, bound evaluations).
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// C(n, k) with the usual conventions: 0 when k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (n - k < k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step: r is C(n-k+i, i) here
    }
    return r;
}

inline BigInt pow2(long long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << static_cast<unsigned>(e);
}

/// log2 of a positive BigInt, accurate to ~1e-15 relative error.
inline double log2_approx(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2_approx: argument must be positive");
    const unsigned bits = boost::multiprecision::msb(v);  // index of highest set bit
    if (bits <= 62) return std::log2(v.convert_to<double>());
    const unsigned shift = bits - 62;
    const double mant = BigInt(v >> shift).convert_to<double>();
    return std::log2(mant) + static_cast<double>(shift);
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

/// Inverse of a modulo prime m, via Fermat.
inline int mod_inverse(int a, int m) {
    a %= m;
    if (a < 0) a += m;
    if (a == 0) throw std::invalid_argument("mod_inverse: zero has no inverse");
    long long base = a, acc = 1;
    for (int e = m - 2; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
    }
    return static_cast<int>(acc);
}

}  // namespace rmcodes
