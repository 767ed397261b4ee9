#include "rmcodes/gf.hpp"

#include <stdexcept>

#include "rmcodes/numeric.hpp"

namespace rmcodes {

namespace {

// Polynomials over Z_p as coefficient vectors, constant term first, no
// trailing-zero guarantees; degree is the last nonzero index.

int poly_degree(const std::vector<int>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

// Remainder of a mod b (b nonzero), all coefficients already in [0, p).
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = poly_degree(b);
    const int lead_inv = mod_inverse(b[static_cast<size_t>(db)], p);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        const int coef = static_cast<int>(
            static_cast<long long>(a[static_cast<size_t>(da)]) * lead_inv % p);
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            long long v = a[static_cast<size_t>(i + shift)] -
                          static_cast<long long>(coef) * b[static_cast<size_t>(i)] % p;
            a[static_cast<size_t>(i + shift)] = static_cast<int>(((v % p) + p) % p);
        }
    }
    return a;
}

std::vector<int> monic_from_low(const std::vector<int>& low, int deg) {
    std::vector<int> f(static_cast<size_t>(deg) + 1, 0);
    for (size_t i = 0; i < low.size(); ++i) f[i] = low[i];
    f[static_cast<size_t>(deg)] = 1;
    return f;
}

std::vector<int> digits_base_p(long long v, int p, int count) {
    std::vector<int> d(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        d[static_cast<size_t>(i)] = static_cast<int>(v % p);
        v /= p;
    }
    return d;
}

}  // namespace

bool is_irreducible_monic(int p, const std::vector<int>& low_coeffs) {
    const int m = static_cast<int>(low_coeffs.size());
    if (m < 1) throw std::invalid_argument("is_irreducible_monic: degree must be >= 1");
    if (m == 1) return true;
    const std::vector<int> f = monic_from_low(low_coeffs, m);
    // Trial division by every monic polynomial of degree 1 .. m/2.
    for (int e = 1; 2 * e <= m; ++e) {
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            const std::vector<int> g = monic_from_low(digits_base_p(v, p, e), e);
            if (poly_degree(poly_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

FieldContext::FieldContext(int p, int m) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("FieldContext: p must be prime");
    if (m < 1) throw std::invalid_argument("FieldContext: m must be >= 1");
    long long sz = 1;
    for (int i = 0; i < m; ++i) {
        sz *= p;
        if (sz > (1 << 28)) throw std::invalid_argument("FieldContext: p^m too large");
    }
    size_ = static_cast<int>(sz);
    for (long long v = 0; v < sz; ++v) {
        std::vector<int> low = digits_base_p(v, p, m);
        if (is_irreducible_monic(p, low)) {
            modulus_low_ = std::move(low);
            return;
        }
    }
    throw std::logic_error("FieldContext: no irreducible modulus found");  // cannot happen
}

FieldContext::FieldContext(int p, int m, std::vector<int> modulus_low) : FieldContext(p, m) {
    if (static_cast<int>(modulus_low.size()) != m)
        throw std::invalid_argument("FieldContext: modulus must list exactly m low coefficients");
    for (int c : modulus_low)
        if (c < 0 || c >= p) throw std::invalid_argument("FieldContext: modulus coefficient out of range");
    if (!is_irreducible_monic(p, modulus_low))
        throw std::invalid_argument("FieldContext: modulus polynomial is reducible");
    modulus_low_ = std::move(modulus_low);
}

void FieldContext::check_element(const Element& a) const {
    if (static_cast<int>(a.size()) != m_)
        throw std::invalid_argument("FieldContext: element has wrong length");
    for (int c : a)
        if (c < 0 || c >= p_) throw std::invalid_argument("FieldContext: coefficient out of range");
}

FieldContext::Element FieldContext::element(int index) const {
    if (index < 0 || index >= size_) throw std::invalid_argument("FieldContext: index out of range");
    return digits_base_p(index, p_, m_);
}

int FieldContext::index_of(const Element& a) const {
    check_element(a);
    long long v = 0;
    for (int i = m_ - 1; i >= 0; --i) v = v * p_ + a[static_cast<size_t>(i)];
    return static_cast<int>(v);
}

FieldContext::Element FieldContext::one() const {
    Element e = zero();
    e[0] = 1;
    return e;
}

FieldContext::Element FieldContext::add(const Element& a, const Element& b) const {
    check_element(a);
    check_element(b);
    Element r(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i)
        r[static_cast<size_t>(i)] = (a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)]) % p_;
    return r;
}

FieldContext::Element FieldContext::sub(const Element& a, const Element& b) const {
    check_element(a);
    check_element(b);
    Element r(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i)
        r[static_cast<size_t>(i)] =
            ((a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)]) % p_ + p_) % p_;
    return r;
}

FieldContext::Element FieldContext::mul(const Element& a, const Element& b) const {
    check_element(a);
    check_element(b);
    std::vector<int> prod(static_cast<size_t>(2 * m_ - 1), 0);
    for (int i = 0; i < m_; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < m_; ++j) {
            prod[static_cast<size_t>(i + j)] = static_cast<int>(
                (prod[static_cast<size_t>(i + j)] +
                 static_cast<long long>(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(j)]) %
                p_);
        }
    }
    const std::vector<int> rem = poly_rem(std::move(prod), monic_from_low(modulus_low_, m_), p_);
    Element r(static_cast<size_t>(m_), 0);
    for (int i = 0; i < m_ && i < static_cast<int>(rem.size()); ++i)
        r[static_cast<size_t>(i)] = rem[static_cast<size_t>(i)];
    return r;
}

FieldContext::Element FieldContext::pow(const Element& a, long long e) const {
    if (e < 0) throw std::invalid_argument("FieldContext::pow: negative exponent");
    Element acc = one();
    Element base = a;
    check_element(base);
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool FieldContext::is_zero(const Element& a) const {
    check_element(a);
    for (int c : a)
        if (c != 0) return false;
    return true;
}

}  // namespace rmcodes
