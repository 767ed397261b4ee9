#include "rmcodes/bch_lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "rmcodes/numeric.hpp"

namespace rmcodes {

namespace {

struct Elimination {
    std::vector<std::vector<int>> reduced;  // Gauss-Jordan form of the input
    std::vector<int> pivot_col_of_row;      // -1 for zero rows
    std::vector<int> pivot_cols;            // ascending
};

// Gauss-Jordan over Z_p, scanning columns right to left so that pivots prefer
// the trailing (redundancy) columns.
Elimination eliminate(std::vector<std::vector<int>> rows, int p) {
    const int nrows = static_cast<int>(rows.size());
    const int ncols = nrows ? static_cast<int>(rows[0].size()) : 0;
    Elimination out;
    out.pivot_col_of_row.assign(static_cast<size_t>(nrows), -1);
    std::vector<char> row_used(static_cast<size_t>(nrows), 0);
    for (int c = ncols - 1; c >= 0; --c) {
        int pr = -1;
        for (int r = 0; r < nrows; ++r) {
            if (!row_used[static_cast<size_t>(r)] && rows[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        row_used[static_cast<size_t>(pr)] = 1;
        out.pivot_col_of_row[static_cast<size_t>(pr)] = c;
        out.pivot_cols.push_back(c);
        const int inv = mod_inverse(rows[static_cast<size_t>(pr)][static_cast<size_t>(c)], p);
        for (int j = 0; j < ncols; ++j)
            rows[static_cast<size_t>(pr)][static_cast<size_t>(j)] = static_cast<int>(
                static_cast<long long>(rows[static_cast<size_t>(pr)][static_cast<size_t>(j)]) * inv % p);
        for (int r = 0; r < nrows; ++r) {
            if (r == pr) continue;
            const int factor = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (factor == 0) continue;
            for (int j = 0; j < ncols; ++j) {
                long long v = rows[static_cast<size_t>(r)][static_cast<size_t>(j)] -
                              static_cast<long long>(factor) *
                                  rows[static_cast<size_t>(pr)][static_cast<size_t>(j)] % p;
                rows[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    static_cast<int>(((v % p) + p) % p);
            }
        }
    }
    std::sort(out.pivot_cols.begin(), out.pivot_cols.end());
    out.reduced = std::move(rows);
    return out;
}

std::vector<std::vector<int>> expand_parity(const FieldContext& field, int t,
                                            const std::vector<int>& alpha_indices) {
    const int m = field.m();
    const int n = static_cast<int>(alpha_indices.size());
    std::vector<std::vector<int>> h(static_cast<size_t>((t + 1) * m),
                                    std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const FieldContext::Element alpha = field.element(alpha_indices[static_cast<size_t>(i)]);
        FieldContext::Element power = field.one();
        for (int j = 0; j <= t; ++j) {
            for (int c = 0; c < m; ++c)
                h[static_cast<size_t>(j * m + c)][static_cast<size_t>(i)] = power[static_cast<size_t>(c)];
            power = field.mul(power, alpha);
        }
    }
    return h;
}

}  // namespace

BchLatticeCodeSpec c3_build(int p, int m, int t, int n,
                            std::optional<std::vector<int>> alpha_indices) {
    if (!is_prime(p)) throw std::invalid_argument("c3_build: p must be prime");
    if (m < 2) throw std::invalid_argument("c3_build: m must be >= 2");
    if (t < 1 || 2 * t > p - 3)
        throw std::invalid_argument("c3_build: need 1 <= t <= (p-3)/2");
    FieldContext field(p, m);
    long long pm1 = 1;
    for (int i = 0; i < m - 1; ++i) pm1 *= p;
    const long long nmax = pm1 * p - 1;
    const long long nmin = std::max(pm1, static_cast<long long>(p) + t * m - 1);
    if (n < nmin || n > nmax)
        throw std::invalid_argument("c3_build: n out of range [" + std::to_string(nmin) + ", " +
                                    std::to_string(nmax) + "]");

    std::vector<int> alphas;
    if (alpha_indices) {
        alphas = *alpha_indices;
        if (static_cast<int>(alphas.size()) != n)
            throw std::invalid_argument("c3_build: need exactly n alpha indices");
        std::set<int> seen;
        for (int a : alphas) {
            if (a < 1 || a >= field.size())
                throw std::invalid_argument("c3_build: alpha index out of range");
            if (!seen.insert(a).second) throw std::invalid_argument("c3_build: duplicate alpha");
        }
    } else {
        for (int a = 1; a <= n; ++a) alphas.push_back(a);
    }

    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;

    std::vector<std::vector<int>> h = expand_parity(field, t, alphas);
    Elimination elim = eliminate(h, p);
    const int rank = static_cast<int>(elim.pivot_cols.size());
    const int k = n - rank;

    bool systematic = true;
    for (int j = 0; j < rank; ++j)
        if (elim.pivot_cols[static_cast<size_t>(j)] != k + j) systematic = false;
    if (!systematic) {
        // Move the pivot columns to the back (both blocks in ascending order)
        // and redo the elimination; the pivot set is linearly independent, so
        // the right-to-left scan now places every pivot in the trailing block.
        std::vector<char> is_pivot(static_cast<size_t>(n), 0);
        for (int c : elim.pivot_cols) is_pivot[static_cast<size_t>(c)] = 1;
        std::vector<int> new_alphas, new_order;
        for (int i = 0; i < n; ++i)
            if (!is_pivot[static_cast<size_t>(i)]) {
                new_alphas.push_back(alphas[static_cast<size_t>(i)]);
                new_order.push_back(i);
            }
        for (int i = 0; i < n; ++i)
            if (is_pivot[static_cast<size_t>(i)]) {
                new_alphas.push_back(alphas[static_cast<size_t>(i)]);
                new_order.push_back(i);
            }
        alphas = std::move(new_alphas);
        order = std::move(new_order);
        h = expand_parity(field, t, alphas);
        elim = eliminate(h, p);
        for (int j = 0; j < rank; ++j)
            if (elim.pivot_cols[static_cast<size_t>(j)] != k + j)
                throw std::logic_error("c3_build: reordered matrix is not systematic");
    }
    if (p > k + 2) throw std::logic_error("c3_build: p <= k + 2 violated");

    BchLatticeCodeSpec spec{std::move(field), t, n, k, std::move(alphas), std::move(order),
                            std::move(h), {}};
    // x_c = -sum_j reduced[r_c][j] * x_j over the k free columns.
    spec.a.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(rank), 0));
    for (size_t r = 0; r < elim.reduced.size(); ++r) {
        const int c = elim.pivot_col_of_row[r];
        if (c < 0) continue;
        for (int j = 0; j < k; ++j)
            spec.a[static_cast<size_t>(j)][static_cast<size_t>(c - k)] =
                (p - elim.reduced[r][static_cast<size_t>(j)]) % p;
    }
    return spec;
}

std::vector<int> c3_syndrome(const std::vector<int>& digits, const BchLatticeCodeSpec& spec) {
    if (static_cast<int>(digits.size()) != spec.n)
        throw std::invalid_argument("c3_syndrome: digit vector has wrong length");
    const int p = spec.field.p();
    std::vector<int> s(spec.h.size(), 0);
    for (size_t r = 0; r < spec.h.size(); ++r) {
        long long acc = 0;
        for (int i = 0; i < spec.n; ++i)
            acc += static_cast<long long>(spec.h[r][static_cast<size_t>(i)]) *
                   digits[static_cast<size_t>(i)];
        s[r] = static_cast<int>(((acc % p) + p) % p);
    }
    return s;
}

Permutation c3_encode(const Factoradic& u, const BchLatticeCodeSpec& spec) {
    if (u.n() != spec.k + 1)
        throw std::invalid_argument("c3_encode: information digit vector must have length k + 1");
    const int p = spec.field.p();
    const int k = spec.k;
    const int red = spec.n - k;
    std::vector<int> x(static_cast<size_t>(spec.n), 0);
    for (int i = 1; i <= k; ++i) x[static_cast<size_t>(i) - 1] = u.digit(i + 1);
    for (int j = 0; j < red; ++j) {
        long long acc = 0;
        for (int i = 0; i < k; ++i)
            acc += static_cast<long long>(x[static_cast<size_t>(i)] % p) *
                   spec.a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        x[static_cast<size_t>(k + j)] = static_cast<int>(acc % p);
    }
    std::vector<int> digits(static_cast<size_t>(spec.n) + 1, 0);
    for (int i = 0; i < spec.n; ++i) digits[static_cast<size_t>(i) + 1] = x[static_cast<size_t>(i)];
    return phi_inverse(Factoradic(std::move(digits)));
}

Permutation c3_encode(const Permutation& f_info, const BchLatticeCodeSpec& spec) {
    if (f_info.n() != spec.k + 1)
        throw std::invalid_argument("c3_encode: information permutation must be in S_{k+1}");
    return c3_encode(phi(f_info), spec);
}

namespace {

bool syndrome_is_zero(const std::vector<int>& digits, const BchLatticeCodeSpec& spec) {
    const std::vector<int> s = c3_syndrome(digits, spec);
    return std::all_of(s.begin(), s.end(), [](int v) { return v == 0; });
}

// Enumerates candidate corrections y - e over all integer error vectors e of
// l1 weight <= budget; each valid zero-syndrome candidate is reported once.
void search_errors(std::vector<int>& cand, size_t pos, int budget,
                   const BchLatticeCodeSpec& spec, std::vector<std::vector<int>>& found) {
    if (pos == cand.size()) {
        if (syndrome_is_zero(cand, spec)) found.push_back(cand);
        return;
    }
    const int orig = cand[pos];
    const int radix_max = static_cast<int>(pos) + 1;  // digit c_i ranges over 0..i
    for (int delta = -budget; delta <= budget; ++delta) {
        const int v = orig - delta;
        if (v < 0 || v > radix_max) continue;
        cand[pos] = v;
        search_errors(cand, pos + 1, budget - std::abs(delta), spec, found);
    }
    cand[pos] = orig;
}

}  // namespace

std::optional<Permutation> c3_decode(const Permutation& g, const BchLatticeCodeSpec& spec) {
    if (g.n() != spec.n + 1)
        throw std::invalid_argument("c3_decode: received permutation must be in S_{n+1}");
    const Factoradic dg = phi(g);
    std::vector<int> y(static_cast<size_t>(spec.n));
    for (int i = 1; i <= spec.n; ++i) y[static_cast<size_t>(i) - 1] = dg.digit(i + 1);

    std::vector<std::vector<int>> found;
    search_errors(y, 0, spec.t, spec, found);
    if (found.size() != 1) return std::nullopt;

    std::vector<int> info_digits(static_cast<size_t>(spec.k) + 1, 0);
    for (int i = 1; i <= spec.k; ++i) info_digits[static_cast<size_t>(i)] = found[0][static_cast<size_t>(i) - 1];
    return phi_inverse(Factoradic(std::move(info_digits)));
}

Codebook build_c3_codebook(const BchLatticeCodeSpec& spec) {
    if (factorial(spec.k + 1) > 1'000'000)
        throw std::invalid_argument("build_c3_codebook: (k+1)! exceeds the materialization limit");
    Codebook cb;
    cb.n = spec.n + 1;
    cb.k = spec.k + 1;
    cb.d_claimed = 2 * spec.t + 2;
    cb.metric = Metric::kendall;
    cb.construction = "c3";
    cb.params = {{"p", std::to_string(spec.field.p())},
                 {"m", std::to_string(spec.field.m())},
                 {"t", std::to_string(spec.t)}};
    for_each_permutation(spec.k + 1, [&](const Permutation& f) {
        cb.codewords.push_back(c3_encode(f, spec));
        return true;
    });
    cb.sort_by_info();
    return cb;
}

}  // namespace rmcodes
