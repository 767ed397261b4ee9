#include "rmcodes/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "rmcodes/numeric.hpp"

namespace rmcodes {
namespace oracle {

namespace {

// Inversions of the relative permutation, with preallocated buffers and a
// quadratic counter; at codebook sizes this beats the allocating merge-count.
int pair_kendall(const std::vector<int>& f, const std::vector<int>& inv_g, std::vector<int>& rel) {
    const size_t n = f.size();
    for (size_t j = 0; j < n; ++j) rel[j] = inv_g[static_cast<size_t>(f[j]) - 1];
    int cnt = 0;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            if (rel[a] > rel[b]) ++cnt;
    return cnt;
}

int pair_linf(const std::vector<int>& f, const std::vector<int>& g) {
    int best = 0;
    for (size_t i = 0; i < f.size(); ++i) best = std::max(best, std::abs(f[i] - g[i]));
    return best;
}

}  // namespace

int min_distance(const Codebook& cb, int workers) {
    const size_t mcount = cb.codewords.size();
    if (mcount < 2) throw std::invalid_argument("min_distance: need at least two codewords");
    if (workers < 1) throw std::invalid_argument("min_distance: need at least one worker");
    const size_t n = static_cast<size_t>(cb.n);

    std::vector<std::vector<int>> inverses;
    if (cb.metric == Metric::kendall) {
        inverses.reserve(mcount);
        for (const Permutation& c : cb.codewords) {
            std::vector<int> inv(n);
            for (int i = 1; i <= cb.n; ++i) inv[static_cast<size_t>(c(i)) - 1] = i;
            inverses.push_back(std::move(inv));
        }
    }

    auto scan_rows = [&](size_t first_row, size_t stride) {
        std::vector<int> rel(n);
        int best = -1;
        for (size_t i = first_row; i < mcount; i += stride) {
            for (size_t j = i + 1; j < mcount; ++j) {
                const int d = cb.metric == Metric::kendall
                                  ? pair_kendall(cb.codewords[i].entries(), inverses[j], rel)
                                  : pair_linf(cb.codewords[i].entries(), cb.codewords[j].entries());
                if (best < 0 || d < best) best = d;
            }
        }
        return best;
    };

    if (workers == 1) return scan_rows(0, 1);
    std::vector<int> results(static_cast<size_t>(workers), -1);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] { results[static_cast<size_t>(w)] = scan_rows(static_cast<size_t>(w), static_cast<size_t>(workers)); });
    for (std::thread& t : pool) t.join();
    int best = -1;
    for (int r : results)
        if (r >= 0 && (best < 0 || r < best)) best = r;
    return best;
}

bool check_systematic(const Codebook& cb) {
    if (cb.k < 1 || cb.k > cb.n) return false;
    if (BigInt(cb.codewords.size()) != factorial(cb.k)) return false;
    std::set<std::vector<int>> seen;
    for (const Permutation& c : cb.codewords) {
        if (c.n() != cb.n) return false;
        if (!seen.insert(cb.info_of(c).entries()).second) return false;
    }
    return true;
}

VerificationReport exhaustive_decode_test(const Codebook& cb, const Decoder& decoder, int radius,
                                          long long sample_count, unsigned seed) {
    if (radius < 0) throw std::invalid_argument("exhaustive_decode_test: negative radius");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.codebook_id = cb.construction + " n=" + std::to_string(cb.n) + " k=" + std::to_string(cb.k);

    std::vector<size_t> order(cb.codewords.size());
    std::iota(order.begin(), order.end(), size_t{0});
    if (sample_count > 0 && sample_count < static_cast<long long>(order.size())) {
        std::mt19937 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        order.resize(static_cast<size_t>(sample_count));
    }

    for (size_t idx : order) {
        const Permutation& c = cb.codewords[idx];
        const Permutation info = cb.info_of(c);
        const std::vector<Permutation> ball = cb.metric == Metric::kendall
                                                  ? ball_enumerate(c, radius, Metric::kendall)
                                                  : linf_ball(c, radius);
        for (const Permutation& g : ball) {
            ++rep.trials;
            const std::optional<Permutation> out = decoder(g);
            if (!out || *out != info) rep.failures.push_back({c, g, out});
        }
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

Permutation nearest_codeword(const Permutation& g, const Codebook& cb) {
    if (cb.codewords.empty()) throw std::invalid_argument("nearest_codeword: empty codebook");
    const Permutation* best = nullptr;
    int best_d = 0;
    for (const Permutation& c : cb.codewords) {
        const int d = cb.metric == Metric::kendall ? kendall_distance(g, c) : linf_distance(g, c);
        if (!best || d < best_d) {
            best = &c;
            best_d = d;
        }
    }
    return *best;
}

namespace {

void linf_ball_rec(const Permutation& center, int r, size_t pos, std::vector<int>& cur,
                   std::vector<char>& used, std::vector<Permutation>& out) {
    const size_t n = cur.size();
    if (pos == n) {
        out.emplace_back(cur);
        return;
    }
    const int c = center(static_cast<int>(pos) + 1);
    for (int v = std::max(1, c - r); v <= std::min(static_cast<int>(n), c + r); ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        used[static_cast<size_t>(v)] = 1;
        cur[pos] = v;
        linf_ball_rec(center, r, pos + 1, cur, used, out);
        used[static_cast<size_t>(v)] = 0;
    }
}

}  // namespace

std::vector<Permutation> linf_ball(const Permutation& center, int r) {
    if (r < 0) throw std::invalid_argument("linf_ball: negative radius");
    std::vector<int> cur(static_cast<size_t>(center.n()));
    std::vector<char> used(static_cast<size_t>(center.n()) + 1, 0);
    std::vector<Permutation> out;
    linf_ball_rec(center, r, 0, cur, used, out);
    return out;
}

}  // namespace oracle
}  // namespace rmcodes
