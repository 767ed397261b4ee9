#pragma once

#include <optional>
#include <vector>

#include "rmcodes/codebook.hpp"
#include "rmcodes/numeric.hpp"
#include "rmcodes/permutation.hpp"

namespace rmcodes {

/// Code in the max-norm metric whose first k coordinates carry the information
/// permutation through widely spaced anchor values 1, 1+d, ..., 1+(k-1)d; the
/// remaining values fill the tail in ascending order. Any two codewords differ
/// by >= d in some anchor coordinate.
struct SpreadCodeSpec {
    int n = 0, d = 0, k = 0;
    std::vector<int> anchors;
    SpreadCodeSpec(int n, int d, int k);
};

Permutation c6_encode(const Permutation& f_info, const SpreadCodeSpec& spec);
/// Rounds each of the first k received entries to the nearest anchor; ties or
/// repeated anchors mean the error exceeded the design radius.
std::optional<Permutation> c6_decode(const Permutation& g, const SpreadCodeSpec& spec);

Codebook build_c6_codebook(const SpreadCodeSpec& spec);

/// |{f in S_n : f(i) = i mod d}| = prod over residue classes of s_c!.
BigInt inner_code_size(int n, int d);

/// Code in the max-norm metric over S_{n+k}: a prefix permutation of the k
/// largest values carries the information; the suffix is the i-th element of
/// the congruence-class inner code, i = rank of the information permutation.
struct ConcatCodeSpec {
    int n = 0, d = 0, k = 0;
    BigInt inner_size;
    ConcatCodeSpec(int n, int d);
    int total_length() const { return n + k; }
};

/// Rank of an inner codeword (f(i) = i mod d) in the mixed-radix order whose
/// classes are taken most-significant-first by residue 1, ..., d, each class
/// ordered by the lexicographic rank of its class permutation.
BigInt inner_rank(const Permutation& c, const ConcatCodeSpec& spec);
Permutation inner_unrank(const BigInt& i, const ConcatCodeSpec& spec);

Permutation c7_encode(const Permutation& f_info, const ConcatCodeSpec& spec);
std::optional<Permutation> c7_decode(const Permutation& g, const ConcatCodeSpec& spec);

Codebook build_c7_codebook(const ConcatCodeSpec& spec);

/// log2(size) / n, computed through a ~1e-15-accurate big-integer log2.
double code_rate(const BigInt& size, int n);

}  // namespace rmcodes
