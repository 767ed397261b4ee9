#pragma once

#include <vector>

namespace rmcodes {

/// Arithmetic in GF(p^m), p prime, m >= 1. Elements are residues of Z_p[x]
/// modulo a monic irreducible of degree m, stored as coefficient vectors of
/// length m with the constant term first. The canonical modulus is the first
/// irreducible found when enumerating lower coefficients as base-p digits of
/// 0, 1, 2, ...; this makes every derived object reproducible.
class FieldContext {
public:
    using Element = std::vector<int>;

    FieldContext(int p, int m);
    FieldContext(int p, int m, std::vector<int> modulus_low);  // low coefficients, validated

    int p() const { return p_; }
    int m() const { return m_; }
    int size() const { return size_; }  // p^m
    /// Low coefficients (degree 0 .. m-1) of the monic modulus polynomial.
    const std::vector<int>& modulus_low() const { return modulus_low_; }

    /// Element with base-p digit expansion of index (0 <= index < p^m).
    Element element(int index) const;
    int index_of(const Element& a) const;

    Element zero() const { return Element(static_cast<size_t>(m_), 0); }
    Element one() const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element pow(const Element& a, long long e) const;
    bool is_zero(const Element& a) const;

private:
    int p_ = 0, m_ = 0, size_ = 0;
    std::vector<int> modulus_low_;

    void check_element(const Element& a) const;
};

/// Is x^deg + low-coefficient tail irreducible over Z_p? Exposed for tests.
bool is_irreducible_monic(int p, const std::vector<int>& low_coeffs);

}  // namespace rmcodes
