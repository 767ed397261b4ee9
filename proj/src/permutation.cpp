#include "rmcodes/permutation.hpp"

#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rmcodes {

std::string to_string(Metric m) {
    return m == Metric::kendall ? "kendall" : "linf";
}

Metric metric_from_string(const std::string& s) {
    if (s == "kendall") return Metric::kendall;
    if (s == "linf") return Metric::linf;
    throw std::invalid_argument("unknown metric: " + s);
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n < 1) throw std::invalid_argument("Permutation: empty entry vector");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: entries are not a bijection on [n]");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("Permutation::identity: n must be >= 1");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

std::string Permutation::to_line_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ' ';
        os << entries_[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& f) {
    return os << '[' << f.to_line_string() << ']';
}

Permutation parse_permutation_line(const std::string& line) {
    std::istringstream is(line);
    std::vector<int> entries;
    std::string tok;
    while (is >> tok) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
        entries.push_back(v);
    }
    if (entries.empty()) throw std::invalid_argument("empty permutation line");
    return Permutation(std::move(entries));
}

Factoradic::Factoradic(std::vector<int> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw std::invalid_argument("Factoradic: empty digit vector");
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] < 0 || digits_[i] > static_cast<int>(i))
            throw std::invalid_argument("Factoradic: digit out of range at index " +
                                        std::to_string(i + 1));
    }
}

Factoradic Factoradic::zeros(int n) {
    if (n < 1) throw std::invalid_argument("Factoradic::zeros: n must be >= 1");
    return Factoradic(std::vector<int>(static_cast<size_t>(n), 0));
}

IndexSet::IndexSet(int n_, std::vector<int> members_) : n(n_), members(std::move(members_)) {
    if (n < 1) throw std::invalid_argument("IndexSet: n must be >= 1");
    if (members.empty()) throw std::invalid_argument("IndexSet: empty member list");
    int prev = 0;
    for (int a : members) {
        if (a <= prev) throw std::invalid_argument("IndexSet: members must be strictly increasing");
        if (a > n) throw std::invalid_argument("IndexSet: member out of range");
        prev = a;
    }
}

IndexSet first_k(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("first_k: need 1 <= k <= n");
    std::vector<int> m(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) m[static_cast<size_t>(i)] = i + 1;
    return IndexSet(n, std::move(m));
}

Permutation inverse(const Permutation& f) {
    const int n = f.n();
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) inv[static_cast<size_t>(f(i)) - 1] = i;
    return Permutation(std::move(inv));
}

namespace {

// Relabels a list of distinct values by rank: the j-th smallest becomes j.
Permutation relabel_by_rank(const std::vector<int>& vals) {
    std::vector<int> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    out.reserve(vals.size());
    for (int v : vals) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(out));
}

}  // namespace

Permutation project_coords(const Permutation& f, const IndexSet& A) {
    if (A.n != f.n()) throw std::invalid_argument("project_coords: index set is over a different [n]");
    std::vector<int> vals;
    vals.reserve(A.members.size());
    for (int a : A.members) vals.push_back(f(a));
    return relabel_by_rank(vals);
}

Permutation project_values(const Permutation& f, const IndexSet& A) {
    if (A.n != f.n()) throw std::invalid_argument("project_values: index set is over a different [n]");
    std::vector<char> keep(static_cast<size_t>(f.n()) + 1, 0);
    for (int a : A.members) keep[static_cast<size_t>(a)] = 1;
    std::vector<int> vals;
    vals.reserve(A.members.size());
    for (int i = 1; i <= f.n(); ++i)
        if (keep[static_cast<size_t>(f(i))]) vals.push_back(f(i));
    return relabel_by_rank(vals);
}

namespace {

long long merge_count(std::vector<int>& a, std::vector<int>& tmp, size_t lo, size_t hi) {
    if (hi - lo < 2) return 0;
    const size_t mid = lo + (hi - lo) / 2;
    long long cnt = merge_count(a, tmp, lo, mid) + merge_count(a, tmp, mid, hi);
    size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (a[i] <= a[j]) {
            tmp[k++] = a[i++];
        } else {
            cnt += static_cast<long long>(mid - i);
            tmp[k++] = a[j++];
        }
    }
    while (i < mid) tmp[k++] = a[i++];
    while (j < hi) tmp[k++] = a[j++];
    std::copy(tmp.begin() + static_cast<long>(lo), tmp.begin() + static_cast<long>(hi),
              a.begin() + static_cast<long>(lo));
    return cnt;
}

}  // namespace

long long count_inversions(std::vector<int> values) {
    std::vector<int> tmp(values.size());
    return merge_count(values, tmp, 0, values.size());
}

int kendall_distance(const Permutation& f, const Permutation& g) {
    if (f.n() != g.n()) throw std::invalid_argument("kendall_distance: length mismatch");
    const int n = f.n();
    std::vector<int> pos_g(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) pos_g[static_cast<size_t>(g(i))] = i;
    std::vector<int> rel(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) rel[static_cast<size_t>(i) - 1] = pos_g[static_cast<size_t>(f(i))];
    return static_cast<int>(count_inversions(std::move(rel)));
}

int linf_distance(const Permutation& f, const Permutation& g) {
    if (f.n() != g.n()) throw std::invalid_argument("linf_distance: length mismatch");
    int best = 0;
    for (int i = 1; i <= f.n(); ++i) best = std::max(best, std::abs(f(i) - g(i)));
    return best;
}

Factoradic phi(const Permutation& f) {
    const int n = f.n();
    std::vector<int> pos(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(f(i))] = i;
    std::vector<int> digits(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) {
        int c = 0;
        for (int w = 1; w < v; ++w)
            if (pos[static_cast<size_t>(w)] > pos[static_cast<size_t>(v)]) ++c;
        digits[static_cast<size_t>(v) - 1] = c;
    }
    return Factoradic(std::move(digits));
}

Permutation phi_inverse(const Factoradic& v) {
    const int n = v.n();
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    for (int val = 1; val <= n; ++val) {
        // Insert so that exactly digit(val) already-placed (smaller) values
        // end up to the right of val.
        const int idx = static_cast<int>(out.size()) - v.digit(val);
        out.insert(out.begin() + idx, val);
    }
    return Permutation(std::move(out));
}

long long l1_distance(std::span<const int> u, std::span<const int> w) {
    if (u.size() != w.size()) throw std::invalid_argument("l1_distance: length mismatch");
    long long s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += std::abs(static_cast<long long>(u[i]) - w[i]);
    return s;
}

long long l1_distance(const Factoradic& u, const Factoradic& w) {
    return l1_distance(std::span<const int>(u.digits()), std::span<const int>(w.digits()));
}

namespace {

constexpr int kMaxRankN = 20;

std::uint64_t factorial64(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

std::uint64_t rank(const Permutation& f) {
    const int n = f.n();
    if (n > kMaxRankN) throw std::invalid_argument("rank: n exceeds 64-bit range (max 20)");
    std::uint64_t r = 0;
    for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int j = i + 1; j <= n; ++j)
            if (f(j) < f(i)) ++c;
        r += static_cast<std::uint64_t>(c) * factorial64(n - i);
    }
    return r;
}

Permutation unrank(std::uint64_t r, int n) {
    if (n < 1 || n > kMaxRankN) throw std::invalid_argument("unrank: need 1 <= n <= 20");
    if (r >= factorial64(n)) throw std::invalid_argument("unrank: rank out of range");
    std::vector<int> avail(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) avail[static_cast<size_t>(i)] = i + 1;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = factorial64(i);
        const auto d = static_cast<size_t>(r / f);
        r %= f;
        out.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<long>(d));
    }
    return Permutation(std::move(out));
}

std::vector<Permutation> ball_enumerate(const Permutation& center, int r, Metric metric) {
    if (r < 0) throw std::invalid_argument("ball_enumerate: negative radius");
    const int n = center.n();
    if (metric == Metric::kendall) {
        std::set<std::vector<int>> visited{center.entries()};
        std::vector<std::vector<int>> frontier{center.entries()};
        for (int depth = 0; depth < r && !frontier.empty(); ++depth) {
            std::vector<std::vector<int>> next;
            for (const auto& p : frontier) {
                for (int i = 0; i + 1 < n; ++i) {
                    std::vector<int> q = p;
                    std::swap(q[static_cast<size_t>(i)], q[static_cast<size_t>(i) + 1]);
                    if (visited.insert(q).second) next.push_back(std::move(q));
                }
            }
            frontier = std::move(next);
        }
        std::vector<Permutation> out;
        out.reserve(visited.size());
        for (const auto& e : visited) out.emplace_back(e);
        return out;
    }
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) {
        if (linf_distance(p, center) <= r) out.push_back(p);
        return true;
    });
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace rmcodes
