#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rmcodes {

enum class Metric { kendall, linf };

std::string to_string(Metric m);
Metric metric_from_string(const std::string& s);

/// A permutation of [n] = {1, ..., n} in single-line (vector) notation.
/// Entries are 1-based values; the constructor rejects anything that is not a
/// bijection on [n]. Instances are immutable.
class Permutation {
public:
    explicit Permutation(std::vector<int> entries);
    static Permutation identity(int n);

    int n() const { return static_cast<int>(entries_.size()); }
    /// Value at 1-based position i.
    int operator()(int i) const { return entries_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;  // lexicographic

    std::string to_line_string() const;  // "4 1 3 2"

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& f);

/// Parses a space-separated line such as "4 1 3 2" into a Permutation.
/// Throws std::invalid_argument on malformed input.
Permutation parse_permutation_line(const std::string& line);

/// Inversion-table digit vector (v_1, ..., v_n) of a permutation: v_i counts
/// the values smaller than i appearing to the right of i. Position i admits
/// digits 0..i-1, so v_1 is always 0 but is kept explicitly: the vector is a
/// mixed-radix word in Z_1 x Z_2 x ... x Z_n.
class Factoradic {
public:
    explicit Factoradic(std::vector<int> digits);
    static Factoradic zeros(int n);

    int n() const { return static_cast<int>(digits_.size()); }
    /// Digit at 1-based index i (0 <= digit(i) <= i-1).
    int digit(int i) const { return digits_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& digits() const { return digits_; }

    bool operator==(const Factoradic&) const = default;

private:
    std::vector<int> digits_;
};

/// Nonempty subset of [n], kept strictly increasing.
struct IndexSet {
    int n = 0;
    std::vector<int> members;
    IndexSet(int n, std::vector<int> members);
    int size() const { return static_cast<int>(members.size()); }
};

/// {1, ..., k} viewed inside [n].
IndexSet first_k(int n, int k);

Permutation inverse(const Permutation& f);

/// f|_A: keep the coordinates (positions) listed in A, in position order, and
/// relabel the surviving values by their rank within the kept set.
Permutation project_coords(const Permutation& f, const IndexSet& A);

/// f|^A: keep the values listed in A, in order of appearance, and relabel by
/// rank within A. Equals inverse(project_coords(inverse(f), A)).
Permutation project_values(const Permutation& f, const IndexSet& A);

/// Number of pairs out of order; the argument is consumed.
long long count_inversions(std::vector<int> values);

/// Minimum number of adjacent transpositions turning f into g; computed as the
/// inversion count of the relative permutation j -> position of f(j) in g
/// (merge-count, O(n log n)).
int kendall_distance(const Permutation& f, const Permutation& g);

/// max_i |f(i) - g(i)|.
int linf_distance(const Permutation& f, const Permutation& g);

Factoradic phi(const Permutation& f);
Permutation phi_inverse(const Factoradic& v);

long long l1_distance(std::span<const int> u, std::span<const int> w);
long long l1_distance(const Factoradic& u, const Factoradic& w);

/// Lexicographic rank of f within S_n, 0-based. Supports n <= 20 (the largest
/// n with n! below 2^64).
std::uint64_t rank(const Permutation& f);
Permutation unrank(std::uint64_t r, int n);

/// All permutations at distance <= r from the center, sorted lexicographically.
/// Kendall balls grow by breadth-first adjacent transpositions; l-infinity
/// balls filter S_n, so expect exponential cost in n for that metric.
std::vector<Permutation> ball_enumerate(const Permutation& center, int r, Metric metric);

/// Calls fn for each element of S_n in lexicographic order until fn returns
/// false. Intended for small n; n! iterations.
template <class F>
void for_each_permutation(int n, F&& fn) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    do {
        if (!fn(Permutation(v))) return;
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(int n);

}  // namespace rmcodes
