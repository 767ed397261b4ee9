#include "rmcodes/kendall_codes.hpp"

#include <stdexcept>
#include <string>

#include "rmcodes/numeric.hpp"

namespace rmcodes {

namespace {

constexpr long long kMaxCodebookSize = 1'000'000;

void check_enumerable(int k) {
    if (factorial(k) > kMaxCodebookSize)
        throw std::invalid_argument("codebook build: k! exceeds the materialization limit");
}

}  // namespace

RhoCodeSpec::RhoCodeSpec(int k_, int r_, int m_) : k(k_), r(r_), m(m_) {
    if (k < 3) throw std::invalid_argument("RhoCodeSpec: k must be >= 3");
    if (r < 1) throw std::invalid_argument("RhoCodeSpec: r must be >= 1");
    if (m != k && m != k + 1) throw std::invalid_argument("RhoCodeSpec: m must be k or k+1");
    if (!is_prime(m)) throw std::invalid_argument("RhoCodeSpec: m must be prime");
}

int default_rho_modulus(int k) {
    if (k >= 2 && is_prime(k)) return k;
    if (is_prime(k + 1)) return k + 1;
    throw std::invalid_argument("default_rho_modulus: neither k nor k+1 is prime for k=" +
                                std::to_string(k));
}

int rho(const Permutation& f, int j, int m) {
    if (j < 1) throw std::invalid_argument("rho: j must be >= 1");
    if (m < 2) throw std::invalid_argument("rho: modulus must be >= 2");
    long long s = 0;
    for (int i = 1; i <= f.n(); ++i) {
        long long w = 1;
        for (int e = 0; e < j; ++e) w = w * ((2 * i - 1) % m) % m;
        s = (s + w * f(i)) % m;
    }
    return static_cast<int>(s);
}

namespace {

// Extends the information permutation's inversion table by the given
// redundancy digits and reconstructs the full permutation in S_{k+r}.
Permutation assemble_rho_codeword(const Permutation& f_info, const std::vector<int>& red_digits) {
    std::vector<int> digits = phi(f_info).digits();
    for (size_t j = 0; j < red_digits.size(); ++j) digits.push_back(red_digits[j]);
    return phi_inverse(Factoradic(std::move(digits)));
}

std::vector<int> rho_digits(const Permutation& f_info, int r, int m) {
    std::vector<int> out(static_cast<size_t>(r));
    for (int j = 1; j <= r; ++j) out[static_cast<size_t>(j) - 1] = rho(f_info, j, m);
    return out;
}

}  // namespace

Permutation rho_encode(const Permutation& f_info, const RhoCodeSpec& spec) {
    if (f_info.n() != spec.k) throw std::invalid_argument("rho_encode: information length != k");
    return assemble_rho_codeword(f_info, rho_digits(f_info, spec.r, spec.m));
}

Permutation c1_encode(const Permutation& f_info, const RhoCodeSpec& spec) {
    if (spec.r != 2) throw std::invalid_argument("c1_encode: spec must have exactly 2 redundancy digits");
    return rho_encode(f_info, spec);
}

std::optional<Permutation> c1_decode(const Permutation& g, const RhoCodeSpec& spec,
                                     C1DecodeTrace* trace) {
    if (spec.r != 2) throw std::invalid_argument("c1_decode: spec must have exactly 2 redundancy digits");
    if (g.n() != spec.n()) throw std::invalid_argument("c1_decode: received length != k + 2");
    const int k = spec.k, m = spec.m;

    const Permutation info = project_values(g, first_k(g.n(), k));
    const Permutation reenc = c1_encode(info, spec);
    const Factoradic dg = phi(g);
    const Factoradic dr = phi(reenc);
    if (trace) {
        trace->received_digit_1 = dg.digit(k + 1);
        trace->received_digit_2 = dg.digit(k + 2);
        trace->reencoded_digit_1 = dr.digit(k + 1);
        trace->reencoded_digit_2 = dr.digit(k + 2);
        trace->swap_index = 0;
    }

    // A single transposition that did not touch the information symbols (or no
    // error at all) leaves the information projection intact.
    if (kendall_distance(reenc, g) <= 1) return info;

    // Otherwise two adjacent information symbols were swapped. The two
    // redundancy digits of g still hold rho_1, rho_2 of the *sent* information
    // permutation; their differences from the re-encoded digits locate the swap.
    const int d1 = ((dg.digit(k + 1) - dr.digit(k + 1)) % m + m) % m;
    const int d2 = ((dg.digit(k + 2) - dr.digit(k + 2)) % m + m) % m;
    if (d1 == 0) return std::nullopt;  // inconsistent with a single info swap
    const int i = static_cast<int>(
        static_cast<long long>(d2) * mod_inverse(4 * d1 % m, m) % m);
    if (i < 1 || i > k - 1) return std::nullopt;

    std::vector<int> fixed = info.entries();
    std::swap(fixed[static_cast<size_t>(i) - 1], fixed[static_cast<size_t>(i)]);
    const Permutation candidate_info(std::move(fixed));
    const Permutation candidate = c1_encode(candidate_info, spec);
    if (kendall_distance(candidate, g) > 1) return std::nullopt;
    if (trace) trace->swap_index = i;
    return candidate_info;
}

GW2CodeSpec::GW2CodeSpec(int k_) : k(k_) {
    if (k < 2) throw std::invalid_argument("GW2CodeSpec: k must be >= 2");
}

int gw_syndrome(std::span<const int> x, int k) {
    if (k < 2) throw std::invalid_argument("gw_syndrome: k must be >= 2");
    const int mod = 2 * k + 3;
    long long s = 0;
    for (size_t i = 0; i < x.size(); ++i) s = (s + static_cast<long long>(i + 1) * x[i]) % mod;
    return static_cast<int>(((s % mod) + mod) % mod);
}

int gw_syndrome(const std::vector<int>& x, int k) {
    return gw_syndrome(std::span<const int>(x), k);
}

Permutation c2_encode(const Permutation& f_info, const GW2CodeSpec& spec) {
    if (f_info.n() != spec.k) throw std::invalid_argument("c2_encode: information length != k");
    const int k = spec.k;
    // Digits v_2..v_k of the information word, doubled, weighted-summed.
    const Factoradic di = phi(f_info);
    std::vector<int> doubled(static_cast<size_t>(k) - 1);
    for (int i = 2; i <= k; ++i) doubled[static_cast<size_t>(i) - 2] = 2 * di.digit(i);
    const int s = gw_syndrome(doubled, k);

    std::vector<int> digits = di.digits();
    digits.push_back(s / 3);  // digit at position k+1, radix k+1: s/3 <= (2k+2)/3 <= k
    digits.push_back(s % 3);  // digit at position k+2
    return phi_inverse(Factoradic(std::move(digits)));
}

std::optional<Permutation> c2_decode(const Permutation& g, const GW2CodeSpec& spec) {
    if (g.n() != spec.n()) throw std::invalid_argument("c2_decode: received length != k + 2");
    const int k = spec.k;
    const int mod = spec.modulus();
    const Factoradic dg = phi(g);
    // y = digits v_2..v_{k+2}; a codeword satisfies sum_i i*y_i = 0 mod 2k+3.
    std::vector<int> y(static_cast<size_t>(k) + 1);
    for (int i = 2; i <= k + 2; ++i) y[static_cast<size_t>(i) - 2] = dg.digit(i);
    const int sigma = gw_syndrome(y, k);

    if (sigma != 0) {
        if (sigma <= k + 1) {
            y[static_cast<size_t>(sigma) - 1] -= 1;  // one digit was bumped up
        } else {
            y[static_cast<size_t>(mod - sigma) - 1] += 1;  // one digit was bumped down
        }
    }
    // Rebuild and validate the corrected digit vector.
    std::vector<int> digits(static_cast<size_t>(k) + 2, 0);
    for (int i = 2; i <= k + 2; ++i) {
        const int v = y[static_cast<size_t>(i) - 2];
        if (v < 0 || v > i - 1) return std::nullopt;
        digits[static_cast<size_t>(i) - 1] = v;
    }
    const Permutation corrected = phi_inverse(Factoradic(std::move(digits)));
    return project_values(corrected, first_k(corrected.n(), k));
}

namespace {

Codebook build_rho_family(const RhoCodeSpec& spec, std::string construction, int d_claimed) {
    check_enumerable(spec.k);
    Codebook cb;
    cb.n = spec.n();
    cb.k = spec.k;
    cb.metric = Metric::kendall;
    cb.construction = std::move(construction);
    cb.params = {{"m", std::to_string(spec.m)}};
    for_each_permutation(spec.k, [&](const Permutation& f) {
        cb.codewords.push_back(assemble_rho_codeword(f, rho_digits(f, spec.r, spec.m)));
        return true;
    });
    cb.sort_by_info();
    cb.d_claimed = d_claimed;
    return cb;
}

int measured_min_distance(const Codebook& cb) {
    int best = -1;
    for (size_t i = 0; i < cb.codewords.size(); ++i)
        for (size_t j = i + 1; j < cb.codewords.size(); ++j) {
            const int d = kendall_distance(cb.codewords[i], cb.codewords[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

}  // namespace

Codebook rho_code_build(const RhoCodeSpec& spec) {
    Codebook cb = build_rho_family(spec, "rho", 0);
    cb.d_claimed = spec.r == 2 ? 3 : measured_min_distance(cb);
    return cb;
}

Codebook build_c1_codebook(int k, int m) {
    return build_rho_family(RhoCodeSpec(k, 2, m), "c1", 3);
}

Codebook build_c2_codebook(int k) {
    const GW2CodeSpec spec(k);
    check_enumerable(k);
    Codebook cb;
    cb.n = spec.n();
    cb.k = k;
    cb.d_claimed = 3;
    cb.metric = Metric::kendall;
    cb.construction = "c2";
    for_each_permutation(k, [&](const Permutation& f) {
        cb.codewords.push_back(c2_encode(f, spec));
        return true;
    });
    cb.sort_by_info();
    return cb;
}

std::optional<Codebook> c5_greedy(int n, int k, int d) {
    if (!(1 <= k && k < n)) throw std::invalid_argument("c5_greedy: need 1 <= k < n");
    if (d < 1) throw std::invalid_argument("c5_greedy: d must be >= 1");
    check_enumerable(k);
    const BigInt target = factorial(k);
    const IndexSet head = first_k(n, k);

    Codebook cb;
    cb.n = n;
    cb.k = k;
    cb.d_claimed = d;
    cb.metric = Metric::kendall;
    cb.construction = "c5";
    std::vector<Permutation> infos;  // projections of kept codewords
    for_each_permutation(n, [&](const Permutation& f) {
        for (const Permutation& c : cb.codewords)
            if (kendall_distance(f, c) < d) return true;
        const Permutation info = project_values(f, head);
        for (const Permutation& used : infos)
            if (used == info) return true;
        cb.codewords.push_back(f);
        infos.push_back(info);
        return BigInt(cb.codewords.size()) < target;
    });
    if (BigInt(cb.codewords.size()) < target) return std::nullopt;
    cb.sort_by_info();
    return cb;
}

}  // namespace rmcodes
