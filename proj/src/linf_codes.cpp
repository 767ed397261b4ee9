#include "rmcodes/linf_codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmcodes {

namespace {

// Values in [n] congruent to c (mod d), ascending; residue class d holds the
// multiples of d.
std::vector<int> class_members(int n, int d, int c) {
    std::vector<int> m;
    for (int v = c; v <= n; v += d) m.push_back(v);
    return m;
}

int class_size(int n, int d, int c) {
    return (n - c) / d + 1;
}

}  // namespace

SpreadCodeSpec::SpreadCodeSpec(int n_, int d_, int k_) : n(n_), d(d_), k(k_) {
    if (n < 1 || d < 1) throw std::invalid_argument("SpreadCodeSpec: need n >= 1, d >= 1");
    const int kmax = (n - 1) / d + 1;  // = ceil(n/d)
    if (k < 1 || k > kmax) throw std::invalid_argument("SpreadCodeSpec: need 1 <= k <= ceil(n/d)");
    for (int i = 0; i < k; ++i) anchors.push_back(1 + i * d);
}

Permutation c6_encode(const Permutation& f_info, const SpreadCodeSpec& spec) {
    if (f_info.n() != spec.k) throw std::invalid_argument("c6_encode: information length != k");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(spec.n));
    std::vector<char> used(static_cast<size_t>(spec.n) + 1, 0);
    for (int i = 1; i <= spec.k; ++i) {
        const int a = spec.anchors[static_cast<size_t>(f_info(i)) - 1];
        out.push_back(a);
        used[static_cast<size_t>(a)] = 1;
    }
    for (int v = 1; v <= spec.n; ++v)
        if (!used[static_cast<size_t>(v)]) out.push_back(v);
    return Permutation(std::move(out));
}

std::optional<Permutation> c6_decode(const Permutation& g, const SpreadCodeSpec& spec) {
    if (g.n() != spec.n) throw std::invalid_argument("c6_decode: received length != n");
    std::vector<int> idx(static_cast<size_t>(spec.k));
    std::vector<char> taken(static_cast<size_t>(spec.k) + 1, 0);
    for (int i = 1; i <= spec.k; ++i) {
        const int x = g(i);
        int best = -1;
        bool tie = false;
        for (int a = 0; a < spec.k; ++a) {
            const int dist = std::abs(x - spec.anchors[static_cast<size_t>(a)]);
            if (best < 0 || dist < std::abs(x - spec.anchors[static_cast<size_t>(best)])) {
                best = a;
                tie = false;
            } else if (dist == std::abs(x - spec.anchors[static_cast<size_t>(best)])) {
                tie = true;
            }
        }
        if (tie) return std::nullopt;                       // equidistant between anchors
        if (taken[static_cast<size_t>(best) + 1]) return std::nullopt;  // two entries, one anchor
        taken[static_cast<size_t>(best) + 1] = 1;
        idx[static_cast<size_t>(i) - 1] = best + 1;
    }
    return Permutation(std::move(idx));
}

Codebook build_c6_codebook(const SpreadCodeSpec& spec) {
    if (factorial(spec.k) > 1'000'000)
        throw std::invalid_argument("build_c6_codebook: k! exceeds the materialization limit");
    Codebook cb;
    cb.n = spec.n;
    cb.k = spec.k;
    cb.d_claimed = spec.d;
    cb.metric = Metric::linf;
    cb.construction = "c6";
    for_each_permutation(spec.k, [&](const Permutation& f) {
        cb.codewords.push_back(c6_encode(f, spec));
        return true;
    });
    cb.sort_by_info();
    return cb;
}

BigInt inner_code_size(int n, int d) {
    if (n < 1 || d < 1 || d > n) throw std::invalid_argument("inner_code_size: need 1 <= d <= n");
    BigInt size = 1;
    for (int c = 1; c <= d; ++c) size *= factorial(class_size(n, d, c));
    return size;
}

ConcatCodeSpec::ConcatCodeSpec(int n_, int d_) : n(n_), d(d_) {
    inner_size = inner_code_size(n, d);  // also validates n, d
    BigInt f = 1;
    k = 1;
    while (f * (k + 1) <= inner_size) {
        f *= (k + 1);
        ++k;
    }
}

BigInt inner_rank(const Permutation& c, const ConcatCodeSpec& spec) {
    if (c.n() != spec.n) throw std::invalid_argument("inner_rank: length mismatch");
    for (int i = 1; i <= spec.n; ++i)
        if ((c(i) - i) % spec.d != 0)
            throw std::invalid_argument("inner_rank: entry not congruent to its position");
    BigInt acc = 0;
    for (int cls = 1; cls <= spec.d; ++cls) {
        const std::vector<int> members = class_members(spec.n, spec.d, cls);
        const int s = static_cast<int>(members.size());
        if (s > 20) throw std::invalid_argument("inner_rank: class too large to rank (max 20)");
        std::vector<int> sigma(static_cast<size_t>(s));
        for (int j = 0; j < s; ++j) {
            const int v = c(cls + j * spec.d);
            const auto it = std::lower_bound(members.begin(), members.end(), v);
            sigma[static_cast<size_t>(j)] = static_cast<int>(it - members.begin()) + 1;
        }
        acc = acc * factorial(s) + rank(Permutation(std::move(sigma)));
    }
    return acc;
}

Permutation inner_unrank(const BigInt& i, const ConcatCodeSpec& spec) {
    if (i < 0 || i >= spec.inner_size) throw std::invalid_argument("inner_unrank: rank out of range");
    std::vector<std::uint64_t> digit(static_cast<size_t>(spec.d) + 1, 0);
    BigInt rem = i;
    for (int cls = spec.d; cls >= 1; --cls) {
        const int s = class_size(spec.n, spec.d, cls);
        if (s > 20) throw std::invalid_argument("inner_unrank: class too large to unrank (max 20)");
        const BigInt f = factorial(s);
        digit[static_cast<size_t>(cls)] = BigInt(rem % f).convert_to<std::uint64_t>();
        rem /= f;
    }
    std::vector<int> out(static_cast<size_t>(spec.n));
    for (int cls = 1; cls <= spec.d; ++cls) {
        const std::vector<int> members = class_members(spec.n, spec.d, cls);
        const Permutation sigma = unrank(digit[static_cast<size_t>(cls)], static_cast<int>(members.size()));
        for (int j = 0; j < static_cast<int>(members.size()); ++j)
            out[static_cast<size_t>(cls + j * spec.d) - 1] = members[static_cast<size_t>(sigma(j + 1)) - 1];
    }
    return Permutation(std::move(out));
}

Permutation c7_encode(const Permutation& f_info, const ConcatCodeSpec& spec) {
    if (f_info.n() != spec.k) throw std::invalid_argument("c7_encode: information length != k");
    if (spec.k > 20) throw std::invalid_argument("c7_encode: k too large to rank (max 20)");
    const BigInt i = rank(f_info);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(spec.total_length()));
    for (int j = 1; j <= spec.k; ++j) out.push_back(spec.n + f_info(j));
    const Permutation suffix = inner_unrank(i, spec);
    for (int j = 1; j <= spec.n; ++j) out.push_back(suffix(j));
    return Permutation(std::move(out));
}

std::optional<Permutation> c7_decode(const Permutation& g, const ConcatCodeSpec& spec) {
    if (g.n() != spec.total_length())
        throw std::invalid_argument("c7_decode: received length != n + k");
    // The suffix alone determines the information; round each entry to the
    // nearest value in its position's residue class.
    std::vector<int> suffix(static_cast<size_t>(spec.n));
    std::vector<char> used(static_cast<size_t>(spec.n) + 1, 0);
    for (int j = 1; j <= spec.n; ++j) {
        const int x = g(spec.k + j);
        const int cls = (j - 1) % spec.d + 1;
        const std::vector<int> members = class_members(spec.n, spec.d, cls);
        int best = members[0];
        bool tie = false;
        for (int v : members) {
            if (std::abs(x - v) < std::abs(x - best)) {
                best = v;
                tie = false;
            } else if (v != best && std::abs(x - v) == std::abs(x - best)) {
                tie = true;
            }
        }
        if (tie) return std::nullopt;
        if (used[static_cast<size_t>(best)]) return std::nullopt;  // rounding collapsed two entries
        used[static_cast<size_t>(best)] = 1;
        suffix[static_cast<size_t>(j) - 1] = best;
    }
    const BigInt i = inner_rank(Permutation(std::move(suffix)), spec);
    if (i >= factorial(spec.k)) return std::nullopt;  // inner word beyond the information range
    return unrank(i.convert_to<std::uint64_t>(), spec.k);
}

Codebook build_c7_codebook(const ConcatCodeSpec& spec) {
    if (spec.k > 20 || factorial(spec.k) > 1'000'000)
        throw std::invalid_argument("build_c7_codebook: k! exceeds the materialization limit");
    Codebook cb;
    cb.n = spec.total_length();
    cb.k = spec.k;
    cb.d_claimed = spec.d;
    cb.metric = Metric::linf;
    cb.construction = "c7";
    cb.params = {{"inner_n", std::to_string(spec.n)}};
    const std::uint64_t count = factorial(spec.k).convert_to<std::uint64_t>();
    for (std::uint64_t i = 0; i < count; ++i)
        cb.codewords.push_back(c7_encode(unrank(i, spec.k), spec));
    cb.sort_by_info();
    return cb;
}

double code_rate(const BigInt& size, int n) {
    if (n < 1) throw std::invalid_argument("code_rate: n must be >= 1");
    if (size < 1) throw std::invalid_argument("code_rate: size must be >= 1");
    return log2_approx(size) / n;
}

}  // namespace rmcodes
