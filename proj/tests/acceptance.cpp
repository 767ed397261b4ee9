// Acceptance gate: one line per criterion, nonzero exit = number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "rmcodes/bch_lattice.hpp"
#include "rmcodes/bounds.hpp"
#include "rmcodes/gray_embed.hpp"
#include "rmcodes/kendall_codes.hpp"
#include "rmcodes/linf_codes.hpp"
#include "rmcodes/oracle.hpp"
#include "rmcodes/permutation.hpp"

using namespace rmcodes;

namespace {

int g_failures = 0;
bool g_ok = true;
std::string g_first_fail;

void expect(bool cond, const std::string& what) {
    if (!cond) {
        g_ok = false;
        if (g_first_fail.empty()) g_first_fail = what;
    }
}

void criterion(int num, const char* desc, double budget_s, const std::function<void()>& body) {
    g_ok = true;
    g_first_fail.clear();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        expect(false, std::string("unexpected exception: ") + e.what());
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = sec <= budget_s;
    const bool pass = g_ok && in_budget;
    std::printf("%s criterion %d: %s (%.2fs <= %.0fs)\n", pass ? "PASS" : "FAIL", num, desc, sec,
                budget_s);
    if (!g_ok) std::printf("     first failed check: %s\n", g_first_fail.c_str());
    if (!in_budget) std::printf("     over time budget\n");
    if (!pass) ++g_failures;
}

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

long long kendall_naive(const Permutation& f, const Permutation& g) {
    const int n = f.n();
    std::vector<int> pos(n + 1);
    for (int i = 1; i <= n; ++i) pos[g.entries()[i - 1]] = i;
    std::vector<int> rel(n);
    for (int i = 0; i < n; ++i) rel[i] = pos[f.entries()[i]];
    long long inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inv += rel[i] > rel[j];
    return inv;
}

int lee_weight(const std::vector<int>& v, int p) {
    int w = 0;
    for (int d : v) w += std::min(d, p - d);
    return w;
}

}  // namespace

int main() {
    criterion(1, "single-swap decoder worked examples", 1.0, [] {
        const RhoCodeSpec spec(4, 2, 5);
        expect(rho(Permutation({4, 1, 3, 2}), 1, 5) == 1 && rho(Permutation({4, 1, 3, 2}), 2, 5) == 1,
               "digit pair of 4 1 3 2");
        expect(rho(Permutation({4, 3, 1, 2}), 1, 5) == 2 && rho(Permutation({4, 3, 1, 2}), 2, 5) == 4,
               "digit pair of 4 3 1 2");
        expect(c1_encode(Permutation({4, 1, 3, 2}), spec) == Permutation({4, 1, 3, 5, 6, 2}),
               "encode 4 1 3 2");
        expect(c1_encode(Permutation({4, 3, 1, 2}), spec) == Permutation({4, 6, 3, 5, 1, 2}),
               "encode 4 3 1 2");

        C1DecodeTrace clean;
        expect(c1_decode(Permutation({4, 1, 3, 5, 6, 2}), spec, &clean) == Permutation({4, 1, 3, 2}),
               "error-free decode");
        expect(clean.swap_index == 0, "error-free decode takes the projection branch");

        C1DecodeTrace tail;
        expect(c1_decode(Permutation({4, 1, 3, 5, 2, 6}), spec, &tail) == Permutation({4, 1, 3, 2}),
               "redundancy-section swap decode");
        expect(tail.swap_index == 0, "redundancy-section swap stays in the projection branch");

        C1DecodeTrace swap;
        expect(c1_decode(Permutation({4, 3, 1, 5, 6, 2}), spec, &swap) == Permutation({4, 1, 3, 2}),
               "information-section swap decode");
        expect(swap.received_digit_1 == 1 && swap.received_digit_2 == 1, "received digit pair");
        expect(swap.reencoded_digit_1 == 2 && swap.reencoded_digit_2 == 4, "reencoded digit pair");
        expect(swap.swap_index == 2, "recovered swap position");

        expect(!c1_decode(Permutation({1, 3, 4, 5, 6, 2}), spec).has_value(),
               "double-error word is reported uncorrectable");
    });

    criterion(2, "power-sum family corrects one swap end to end", 60.0, [] {
        for (int k = 3; k <= 6; ++k) {
            const int m = default_rho_modulus(k);
            const Codebook cb = build_c1_codebook(k, m);
            expect(cb.codewords.size() == static_cast<size_t>(factorial(k).convert_to<long long>()),
                   "codebook size k=" + std::to_string(k));
            expect(oracle::check_systematic(cb), "systematic k=" + std::to_string(k));
            const int dist = oracle::min_distance(cb, 2);
            expect(dist >= 3, "distance k=" + std::to_string(k));
            if (k == 3) expect(dist == 3, "distance is exactly 3 at k=3");
            const RhoCodeSpec spec(k, 2, m);
            const auto rep = oracle::exhaustive_decode_test(
                cb, [spec](const Permutation& g) { return c1_decode(g, spec); }, 1);
            expect(rep.passed(), "radius-1 decode k=" + std::to_string(k));
            expect(rep.trials == static_cast<long long>(cb.codewords.size()) * (k + 2),
                   "trial count k=" + std::to_string(k));
        }
    });

    criterion(3, "digit-sum family corrects one swap end to end", 120.0, [] {
        for (int k = 2; k <= 6; ++k) {
            const GW2CodeSpec spec(k);
            const Codebook cb = build_c2_codebook(k);
            expect(cb.codewords.size() == static_cast<size_t>(factorial(k).convert_to<long long>()),
                   "codebook size k=" + std::to_string(k));
            for (const Permutation& c : cb.codewords) {
                const Factoradic d = phi(c);
                std::vector<int> y;
                for (int i = 2; i <= k + 2; ++i) y.push_back(d.digit(i));
                expect(gw_syndrome(y, k) == 0, "codeword syndrome k=" + std::to_string(k));
            }
            expect(oracle::check_systematic(cb), "systematic k=" + std::to_string(k));
            expect(oracle::min_distance(cb, 2) >= 3, "distance k=" + std::to_string(k));
            const auto rep = oracle::exhaustive_decode_test(
                cb, [spec](const Permutation& g) { return c2_decode(g, spec); }, 1);
            expect(rep.passed(), "radius-1 decode k=" + std::to_string(k));
        }
    });

    criterion(4, "extra power-sum digits add distance", 10.0, [] {
        const Codebook r6 = rho_code_build(RhoCodeSpec(4, 6, 5));
        expect(r6.n == 10 && r6.codewords.size() == 24, "r=6 family shape");
        expect(oracle::min_distance(r6) == r6.d_claimed, "r=6 claimed distance is measured");
        expect(r6.d_claimed >= 5, "r=6 reaches distance 5");

        const Codebook r10 = rho_code_build(RhoCodeSpec(4, 10, 5));
        expect(oracle::min_distance(r10) == r10.d_claimed, "r=10 claimed distance is measured");
        expect(r10.d_claimed >= 7, "r=10 reaches distance 7");

        for (int k = 3; k <= 5; ++k) {
            const int m = default_rho_modulus(k);
            const Codebook a = rho_code_build(RhoCodeSpec(k, 2, m));
            const Codebook b = build_c1_codebook(k, m);
            expect(a.codewords.size() == b.codewords.size() && a.d_claimed == 3,
                   "r=2 shape k=" + std::to_string(k));
            bool same = true;
            for (size_t i = 0; i < a.codewords.size(); ++i)
                same = same && a.codewords[i] == b.codewords[i];
            expect(same, "r=2 family coincides with the two-digit code k=" + std::to_string(k));
        }
    });

    criterion(5, "lattice family reaches designed distance four", 600.0, [] {
        const BchLatticeCodeSpec spec = c3_build(5, 2, 1, 9);
        expect(spec.k == 6, "information length");

        // Minimum Lee weight of the digit-vector code, by full enumeration of
        // the 5^6 - 1 nonzero information vectors.
        int min_wt = 1 << 30;
        std::vector<int> u(6, 0);
        for (long long it = 1; it < 15625; ++it) {
            int carry = 1;
            for (int i = 0; i < 6 && carry; ++i) {
                u[i] += carry;
                carry = u[i] == 5;
                if (carry) u[i] = 0;
            }
            std::vector<int> word(u);
            for (size_t c = 0; c < spec.a[0].size(); ++c) {
                int acc = 0;
                for (int i = 0; i < 6; ++i) acc += u[i] * spec.a[i][c];
                word.push_back(acc % 5);
            }
            min_wt = std::min(min_wt, lee_weight(word, 5));
        }
        expect(min_wt >= 4, "minimum Lee weight of the digit code");

        const Codebook cb = build_c3_codebook(spec);
        expect(cb.codewords.size() == 5040, "codebook size");
        expect(oracle::check_systematic(cb), "systematic");

        const auto rep = oracle::exhaustive_decode_test(
            cb, [&spec](const Permutation& g) { return c3_decode(g, spec); }, 1, 500);
        expect(rep.passed(), "radius-1 decode on 500 sampled codewords");
        expect(rep.trials == 5000, "sampled trial count");

        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        expect(oracle::min_distance(cb, static_cast<int>(hw)) >= 4, "pairwise minimum distance");
    });

    criterion(6, "binary-embedded family corrects one swap", 60.0, [] {
        const auto spec = c4_find_params(BinaryCodeSpec::hamming(4));
        expect(spec.has_value(), "feasible shortening exists");
        if (!spec) return;
        expect(spec->n == 7 && spec->k == 5, "embedded lengths");
        expect(spec->binary.shorten_count == 3 && spec->binary.k_bits == 8, "binary shape");

        const Codebook cb = build_c4_codebook(*spec);
        expect(cb.codewords.size() == 120, "codebook size");
        expect(oracle::check_systematic(cb), "systematic");
        for (const Permutation& c : cb.codewords) {
            const std::vector<int> image = c4_bit_image(c, *spec);
            const std::vector<int> info(image.begin(), image.begin() + spec->binary.k_bits);
            expect(spec->binary.encode(info) == image, "codeword bit image is a binary codeword");
        }
        const GrayEmbedSpec s = *spec;
        const auto rep = oracle::exhaustive_decode_test(
            cb, [s](const Permutation& g) { return c4_decode(g, s); }, 1);
        expect(rep.passed(), "radius-1 decode");
        expect(rep.trials == 840, "trial count");
    });

    criterion(7, "greedy search matches its feasibility bound", 60.0, [] {
        const auto tiny = c5_greedy(3, 2, 3);
        expect(tiny.has_value(), "3-symbol search succeeds");
        if (tiny) {
            expect(tiny->codewords.size() == 2, "3-symbol codebook size");
            expect(tiny->codewords[0] == Permutation({1, 2, 3}) &&
                       tiny->codewords[1] == Permutation({3, 2, 1}),
                   "3-symbol codebook contents");
        }
        expect(!c5_greedy(3, 2, 4).has_value(), "infeasible target is reported");

        for (const auto& [n, k, d] : std::vector<std::tuple<int, int, int>>{{5, 3, 3}, {6, 3, 4}}) {
            const auto cb = c5_greedy(n, k, d);
            expect(cb.has_value(), "search succeeds n=" + std::to_string(n));
            if (!cb) continue;
            expect(oracle::check_systematic(*cb), "systematic n=" + std::to_string(n));
            expect(oracle::min_distance(*cb) >= d, "distance n=" + std::to_string(n));
        }
    });

    criterion(8, "counting and packing bounds agree with enumeration", 60.0, [] {
        for (int n = 1; n <= 6; ++n) {
            const long long diameter = static_cast<long long>(n) * (n - 1) / 2;
            for (long long r = 0; r <= std::min<long long>(5, diameter); ++r) {
                const auto ball = ball_enumerate(Permutation::identity(n), static_cast<int>(r),
                                                 Metric::kendall);
                expect(ball_size_exact(n, r) == BigInt(ball.size()),
                       "ball size n=" + std::to_string(n) + " r=" + std::to_string(r));
            }
        }
        for (int n = 1; n <= 9; ++n)
            expect(ball_size_exact(n, static_cast<long long>(n) * (n - 1) / 2) == factorial(n),
                   "full-diameter ball n=" + std::to_string(n));
        for (int n = 1; n <= 8; ++n) {
            const long long diameter = static_cast<long long>(n) * (n - 1) / 2;
            for (long long r = 0; r <= diameter; ++r)
                expect(ball_size_exact(n, r) <= ball_size_upper(n, r),
                       "upper bound n=" + std::to_string(n));
        }
        expect(packing_bound(3, 3) == 2 && packing_bound(4, 3) == 6 && packing_bound(5, 3) == 24 &&
                   packing_bound(6, 5) == 36,
               "packing values");
        for (int k = 2; k <= 100; ++k) {
            const BoundReport r3 = counting_bound_check(k + 2, k, 3);
            expect(r3.gv_lhs == BigInt(6) * (k - 1) + binomial(k, 2) && r3.gv_satisfied,
                   "two-redundancy counting bound k=" + std::to_string(k));
            const BoundReport r4 = counting_bound_check(k + 3, k, 4);
            expect(r4.gv_lhs ==
                           BigInt(40) * (k - 1) + BigInt(8) * binomial(k, 2) + binomial(k + 1, 3) &&
                       r4.gv_satisfied,
                   "three-redundancy counting bound k=" + std::to_string(k));
        }
        expect(max_k_counting_bound(12, 3) == 10, "largest feasible k at n=12 d=3");
        for (int d = 2; d <= 16; ++d)
            expect(psi(d, 2) < 1, "tail weight below one at d=" + std::to_string(d));
        for (int d : {2, 3, 5, 8})
            for (int k = 2; k <= 40; ++k)
                expect(psi(d, k) >= psi(d, k + 1), "tail weight monotone d=" + std::to_string(d));
        expect(xi(2) == 1 && xi(3) == 4, "limit ratio small cases");
        expect(xi(16) > 1 && xi(17) < 1, "limit ratio sign change");
        expect(capacity(CapacityRegime::linear) == 1 &&
                   capacity(CapacityRegime::polynomial, BigRat(1, 3)) == BigRat(2, 3) &&
                   capacity(CapacityRegime::quadratic) == 0,
               "capacity by regime");
    });

    criterion(9, "max-norm families decode within their radius", 60.0, [] {
        {
            const SpreadCodeSpec spec(6, 2, 3);
            const Codebook cb = build_c6_codebook(spec);
            expect(cb.codewords.size() == 6, "anchor codebook size");
            expect(oracle::check_systematic(cb), "anchor systematic");
            expect(oracle::min_distance(cb) == 2, "anchor minimum distance");
            const auto rep = oracle::exhaustive_decode_test(
                cb, [spec](const Permutation& g) { return c6_decode(g, spec); }, 0);
            expect(rep.passed(), "anchor radius-0 decode");
        }
        {
            const SpreadCodeSpec spec(9, 3, 3);
            const Codebook cb = build_c6_codebook(spec);
            expect(oracle::min_distance(cb) >= 3, "wide anchor distance");
            const auto rep = oracle::exhaustive_decode_test(
                cb, [spec](const Permutation& g) { return c6_decode(g, spec); }, 1);
            expect(rep.passed(), "wide anchor radius-1 decode");
        }
        {
            const ConcatCodeSpec spec(4, 2);
            const Codebook cb = build_c7_codebook(spec);
            expect(cb.codewords.size() == 2, "small concatenated size");
            expect(oracle::min_distance(cb) >= 2, "small concatenated distance");
            const auto rep = oracle::exhaustive_decode_test(
                cb, [spec](const Permutation& g) { return c7_decode(g, spec); }, 0);
            expect(rep.passed(), "small concatenated radius-0 decode");
        }
        {
            const ConcatCodeSpec spec(9, 3);
            const Codebook cb = build_c7_codebook(spec);
            expect(cb.codewords.size() == 120, "concatenated size");
            expect(oracle::check_systematic(cb), "concatenated systematic");
            expect(oracle::min_distance(cb, 2) >= 3, "concatenated distance");
            const auto rep = oracle::exhaustive_decode_test(
                cb, [spec](const Permutation& g) { return c7_decode(g, spec); }, 1);
            expect(rep.passed(), "concatenated radius-1 decode");
        }
        expect(ConcatCodeSpec(20, 10).k == 6 && inner_code_size(20, 10) == 1024,
               "concatenated parameters at length 26");
        expect(code_rate(BigInt(720), 26) >= 0.2767, "rate at length 26");
        for (const int n : {8, 16, 64, 256, 1024, 4096, 10000}) {
            const ConcatCodeSpec spec(n, n / 2);
            expect(spec.k <= static_cast<double>(n) / std::log2(std::log2(n)),
                   "information budget n=" + std::to_string(n));
        }
    });

    criterion(10, "metric and digit-transform properties hold in bulk", 120.0, [] {
        std::mt19937 rng(2026);
        for (int it = 0; it < 10000; ++it) {
            const int n = 2 + static_cast<int>(rng() % 9);
            const Permutation f = random_perm(n, rng), g = random_perm(n, rng),
                              h = random_perm(n, rng);
            for (const Metric metric : {Metric::kendall, Metric::linf}) {
                const auto dist = [&](const Permutation& a, const Permutation& b) {
                    return metric == Metric::kendall ? kendall_distance(a, b) : linf_distance(a, b);
                };
                expect((dist(f, g) == 0) == (f == g), "identity of indiscernibles");
                expect(dist(f, g) == dist(g, f), "symmetry");
                expect(dist(f, h) <= dist(f, g) + dist(g, h), "triangle inequality");
            }
        }
        for (int it = 0; it < 3000; ++it) {
            const int n = 2 + static_cast<int>(rng() % 9);
            const Permutation f = random_perm(n, rng), g = random_perm(n, rng);
            const int dk = kendall_distance(f, g);
            expect(dk >= l1_distance(phi(f), phi(g)), "digit-vector embedding");
            const int k = 1 + static_cast<int>(rng() % n);
            long long tail = 0;
            for (int i = k + 1; i <= n; ++i) tail += std::abs(phi(f).digit(i) - phi(g).digit(i));
            expect(dk >= kendall_distance(project_values(f, first_k(n, k)),
                                          project_values(g, first_k(n, k))) +
                             tail,
                   "projection refinement");
        }
        for (int n = 1; n <= 7; ++n) {
            for_each_permutation(n, [&](const Permutation& f) {
                expect(phi_inverse(phi(f)) == f, "digit-transform round trip");
                return true;
            });
        }
        for (int it = 0; it < 2000; ++it) {
            const int n = 2 + static_cast<int>(rng() % 9);
            const Permutation f = random_perm(n, rng);
            const int j = 1 + static_cast<int>(rng() % n);
            const Permutation sub = project_values(f, first_k(n, j));
            for (int i = 1; i <= j; ++i)
                expect(phi(sub).digit(i) == phi(f).digit(i), "projection keeps digit prefix");
        }
        for (int it = 0; it < 2000; ++it) {
            const int n = 2 + static_cast<int>(rng() % 11);
            const Permutation f = random_perm(n, rng), g = random_perm(n, rng);
            expect(kendall_distance(f, g) == kendall_naive(f, g), "pair-count agreement");
        }
    });

    std::printf("%d of 10 criteria failed\n", g_failures);
    return g_failures;
}
